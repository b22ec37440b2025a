#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "rootval/branch.hpp"
#include "rootval/errors.hpp"

using namespace rootval;

namespace {

Branch make_branch(long d, std::map<Rat, Cyclotomic> terms,
                   std::optional<Rat> trunc = std::nullopt) {
  Branch b;
  b.d = d;
  b.y = PuiseuxSeries::from_terms(std::move(terms), 1, trunc);
  return b;
}

Branch mono_branch(long d, std::vector<long> exps,
                   std::optional<Rat> trunc = std::nullopt) {
  std::map<Rat, Cyclotomic> terms;
  for (long e : exps) terms[Rat(e)] = Cyclotomic(1);
  return make_branch(d, std::move(terms), trunc);
}

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

// All valid characteristic-exponent tuples with beta_0 <= d_max, beta_g <= top.
void for_each_char_exponents(long d_max, long top,
                             const std::function<void(const CharExponents&)>& f) {
  std::function<void(std::vector<long>&, long)> rec = [&](std::vector<long>& beta,
                                                          long e) {
    if (e == 1) {
      f(CharExponents{beta});
      return;
    }
    for (long k = beta.back() + 1; k <= top; ++k) {
      if (k % e == 0) continue;
      beta.push_back(k);
      rec(beta, igcd(e, k));
      beta.pop_back();
    }
  };
  for (long d = 2; d <= d_max; ++d) {
    std::vector<long> beta = {d};
    rec(beta, d);
  }
  f(CharExponents{{1}});
}

}  // namespace

TEST_CASE("characteristic exponents of standard examples") {
  CHECK(characteristic_exponents(mono_branch(2, {3})).beta == std::vector<long>{2, 3});
  CHECK(characteristic_exponents(mono_branch(4, {6, 7})).beta ==
        std::vector<long>{4, 6, 7});
  CHECK(characteristic_exponents(mono_branch(1, {2})).beta == std::vector<long>{1});
  // terms divisible by the running gcd are skipped
  CHECK(characteristic_exponents(mono_branch(4, {6, 8, 10, 13})).beta ==
        std::vector<long>{4, 6, 13});
}

TEST_CASE("characteristic exponent failure modes") {
  CHECK(code_of([] { characteristic_exponents(mono_branch(4, {2, 7})); }) ==
        "OrderBelowRamification");
  // gcd stuck at 2: exact series is reducible, truncated one is undecided
  CHECK(code_of([] { characteristic_exponents(mono_branch(4, {6, 10})); }) ==
        "DegenerateInput");
  CHECK(code_of([] {
          characteristic_exponents(mono_branch(4, {6, 10}, Rat(12)));
        }) == "InsufficientPrecision");
}

TEST_CASE("pairs and exponents convert both ways") {
  CharExponents c{{4, 6, 7}};
  CharPairs p = characteristic_pairs(c);
  CHECK(p.pairs == std::vector<std::pair<long, long>>{{3, 2}, {7, 2}});
  CHECK(exponents_from_pairs(p) == c);
  CHECK(characteristic_pairs(CharExponents{{2, 3}}).pairs ==
        std::vector<std::pair<long, long>>{{3, 2}});
  CHECK(characteristic_pairs(CharExponents{{1}}).pairs.empty());
  CHECK(exponents_from_pairs(CharPairs{}).beta == std::vector<long>{1});
}

TEST_CASE("round trip over all small characteristic exponents") {
  long count = 0;
  for_each_char_exponents(12, 60, [&](const CharExponents& c) {
    ++count;
    CHECK(exponents_from_pairs(characteristic_pairs(c)) == c);
  });
  CHECK(count > 100);
}

TEST_CASE("pairs from root valuations") {
  CHECK(pairs_from_root_valuations({rat(3, 2)}).pairs ==
        std::vector<std::pair<long, long>>{{3, 2}});
  CHECK(pairs_from_root_valuations({rat(3, 2), rat(7, 4)}).pairs ==
        std::vector<std::pair<long, long>>{{3, 2}, {7, 2}});
  CHECK(code_of([] { pairs_from_root_valuations({rat(5, 3), rat(7, 3)}); }) ==
        "NotRealizable");
  CHECK(code_of([] { pairs_from_root_valuations({rat(3, 2), rat(3, 2)}); }) ==
        "DegenerateInput");
}

TEST_CASE("root valuations of a branch match m_nu over n_1..n_nu") {
  for_each_char_exponents(8, 40, [&](const CharExponents& c) {
    CharPairs p = characteristic_pairs(c);
    if (p.pairs.empty()) return;
    std::vector<Rat> vals;
    long nprod = 1;
    for (const auto& [m, n] : p.pairs) {
      nprod *= n;
      vals.push_back(rat(m, nprod));
    }
    CHECK(pairs_from_root_valuations(vals) == p);
  });
}

TEST_CASE("inversion swaps the leading pair and is an involution") {
  CHECK(invert_parametrization(CharPairs{{{2, 3}}}).pairs ==
        std::vector<std::pair<long, long>>{{3, 2}});
  CHECK(invert_parametrization(CharPairs{{{5, 2}, {9, 2}}}).pairs ==
        std::vector<std::pair<long, long>>{{2, 5}, {3, 2}});
  CHECK(invert_parametrization(CharPairs{{{3, 2}, {7, 2}}}).pairs ==
        std::vector<std::pair<long, long>>{{2, 3}, {5, 2}});
  CHECK(invert_parametrization(CharPairs{{{2, 3}, {5, 2}}}).pairs ==
        std::vector<std::pair<long, long>>{{3, 2}, {7, 2}});
  for_each_char_exponents(10, 40, [&](const CharExponents& c) {
    CharPairs p = characteristic_pairs(c);
    if (p.pairs.empty() || p.pairs[0].first == p.pairs[0].second) return;
    CharPairs q;
    try {
      q = invert_parametrization(p);
    } catch (const Error& e) {
      CHECK(e.code() == "NotRealizable");
      return;
    }
    CHECK(invert_parametrization(q) == p);
  });
}

TEST_CASE("automatic normalization routes below-ramification branches") {
  // y-order >= d: plain extraction
  CHECK(puiseux_char_pairs(mono_branch(4, {6, 7})).pairs ==
        std::vector<std::pair<long, long>>{{3, 2}, {7, 2}});
  // y-order < d: inversion with the trivial leading pair dropped
  CHECK(puiseux_char_pairs(mono_branch(4, {2, 3})).pairs ==
        std::vector<std::pair<long, long>>{{5, 2}});
  CHECK(puiseux_char_pairs(mono_branch(4, {2, 7})).pairs ==
        std::vector<std::pair<long, long>>{{9, 2}});
  CHECK(puiseux_char_pairs(mono_branch(1, {5})).pairs.empty());
  CHECK(puiseux_char_pairs(Branch::axis()).pairs.empty());
  // (t^3, t^2): cusp seen sideways
  CHECK(puiseux_char_pairs(mono_branch(3, {2})).pairs ==
        std::vector<std::pair<long, long>>{{3, 2}});
}

TEST_CASE("conjugate difference valuations") {
  Branch b = mono_branch(4, {6, 7});
  CHECK(conjugate_difference_valuation(b, 1) == rat(3, 2));
  CHECK(conjugate_difference_valuation(b, 2) == rat(7, 4));
  CHECK(conjugate_difference_valuation(b, 3) == rat(3, 2));
  CHECK(code_of([&] { conjugate_difference_valuation(b, 0); }) ==
        "DegenerateInput");
  CHECK(code_of([&] { conjugate_difference_valuation(b, 4); }) ==
        "DegenerateInput");
}

TEST_CASE("conjugate valuations agree with explicit eigen embeddings") {
  for (const Branch& b :
       {mono_branch(4, {6, 7}), mono_branch(6, {9, 22}), mono_branch(5, {7}),
        mono_branch(6, {8, 10, 11})}) {
    std::vector<PuiseuxSeries> emb = eigen_embeddings(b);
    REQUIRE(static_cast<long>(emb.size()) == b.d);
    for (long j = 1; j < b.d; ++j) {
      Valuation v = difference_valuation(emb[j], emb[0]);
      REQUIRE(v.is_finite());
      CHECK(v.value == conjugate_difference_valuation(b, j));
    }
  }
}

TEST_CASE("conjugate valuation multiset matches the pair valuations") {
  for_each_char_exponents(8, 30, [&](const CharExponents& c) {
    if (c.beta[0] == 1) return;
    std::vector<long> exps(c.beta.begin() + 1, c.beta.end());
    Branch b = mono_branch(c.beta[0], exps);
    CharPairs p = characteristic_pairs(c);
    std::set<Rat> expected;
    long nprod = 1;
    for (const auto& [m, n] : p.pairs) {
      nprod *= n;
      expected.insert(rat(m, nprod));
    }
    std::set<Rat> got;
    for (long j = 1; j < b.d; ++j) {
      got.insert(conjugate_difference_valuation(b, j));
    }
    CHECK(got == expected);
  });
}

TEST_CASE("delta invariant of standard branches") {
  CHECK(branch_delta(mono_branch(2, {3})).value == 1);
  CHECK(branch_delta(mono_branch(2, {5})).value == 2);
  CHECK(branch_delta(mono_branch(4, {6, 7})).value == 8);
  CHECK(branch_delta(mono_branch(1, {2})).value == 0);
  CHECK(branch_delta(Branch::axis()).value == 0);
  CHECK(branch_delta(mono_branch(3, {2})).value == 1);
  auto cert = branch_delta(mono_branch(2, {3}));
  CHECK(cert.method == LocalQuotientCertificate::Method::SemigroupGaps);
  CHECK(cert.stabilized_at >= 2 * cert.value + 2);
}

TEST_CASE("delta matches the Milnor formula for one branch") {
  // 2 delta = mu = sum (n_nu - 1) beta_nu + ... ; cross-check against the
  // closed form 2 delta = sum_nu (e_{nu-1} - e_nu)(beta_nu - 1) computed from
  // the exponents, on a family of monomial branches.
  for_each_char_exponents(6, 18, [&](const CharExponents& c) {
    if (c.beta[0] == 1) return;
    std::vector<long> exps(c.beta.begin() + 1, c.beta.end());
    Branch b = mono_branch(c.beta[0], exps);
    long two_delta = 0;
    long e_prev = c.beta[0];
    for (size_t i = 1; i < c.beta.size(); ++i) {
      long e = igcd(e_prev, c.beta[i]);
      two_delta += (e_prev - e) * (c.beta[i] - 1);
      e_prev = e;
    }
    CHECK(2 * branch_delta(b).value == two_delta);
  });
}

TEST_CASE("delta on a branch with cyclotomic coefficients") {
  std::map<Rat, Cyclotomic> terms;
  terms[Rat(6)] = Cyclotomic::root_of_unity(4);  // i t^6
  terms[Rat(7)] = Cyclotomic(1) + Cyclotomic::root_of_unity(3);
  CHECK(branch_delta(make_branch(4, std::move(terms))).value == 8);
}

TEST_CASE("delta precision and degeneracy errors") {
  CHECK(code_of([] { branch_delta(mono_branch(4, {6}, Rat(8))); }) ==
        "InsufficientPrecision");
  CHECK(code_of([] { branch_delta(mono_branch(4, {6})); }) == "DegenerateInput");
  CHECK(code_of([] { branch_delta(mono_branch(2, {}, Rat(5))); }) ==
        "InsufficientPrecision");
}

TEST_CASE("intersection numbers of standard pairs") {
  Branch cusp = mono_branch(2, {3});
  CHECK(intersection_number(cusp, Branch::axis()) == 2);
  // tacnode: y = t^2 meets y = -t^2 with contact 2... summed over conjugates
  Branch up = make_branch(1, {{Rat(2), Cyclotomic(1)}});
  Branch down = make_branch(1, {{Rat(2), Cyclotomic(-1)}});
  CHECK(intersection_number(up, down) == 2);
  CHECK(intersection_number(make_branch(1, {{Rat(2), Cyclotomic(1)}}),
                            make_branch(1, {{Rat(3), Cyclotomic(1)}})) == 2);
  // cusp against the smooth curve y = 0: contact 3
  Branch zero_line = mono_branch(1, {});
  zero_line.y = PuiseuxSeries::zero(1);
  CHECK(intersection_number(cusp, zero_line) == 3);
  CHECK(intersection_number(mono_branch(4, {6, 7}), cusp) == 13);
}

TEST_CASE("intersection number is symmetric and detects coincidence") {
  Branch a = mono_branch(4, {6, 7});
  Branch b = mono_branch(2, {5});
  CHECK(intersection_number(a, b) == intersection_number(b, a));
  CHECK(code_of([&] { intersection_number(a, a); }) == "NotDistinct");
  CHECK(code_of([] { intersection_number(Branch::axis(), Branch::axis()); }) ==
        "NotDistinct");
  // conjugate parametrizations of the same branch
  Branch tw = a;
  tw.y = a.y.scaled(Cyclotomic(1));
  std::map<Rat, Cyclotomic> terms;
  for (const auto& [e, c] : a.y.terms()) {
    terms[e] = c * Cyclotomic::root_of_unity(4, 2 * num_long(e));
  }
  tw.y = PuiseuxSeries::from_terms(std::move(terms), 1);
  CHECK(code_of([&] { intersection_number(a, tw); }) == "NotDistinct");
}

TEST_CASE("intersection precision error on deep tangency") {
  Branch a = mono_branch(1, {2}, Rat(6));
  Branch b = mono_branch(1, {2}, Rat(6));
  CHECK(code_of([&] { intersection_number(a, b); }) == "InsufficientPrecision");
}
