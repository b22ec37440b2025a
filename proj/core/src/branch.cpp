#include "rootval/branch.hpp"

#include <numeric>
#include <sstream>

#include "rootval/echelon.hpp"
#include "rootval/errors.hpp"

namespace rootval {

namespace {

long exponent_as_long(const Rat& e) {
  ROOTVAL_CHECK(is_integer(e), "branch series must have integer t-exponents");
  return num_long(e);
}

// Support of y as integer t-exponents, ascending.
std::vector<long> support_of(const Branch& b) {
  std::vector<long> s;
  for (const auto& [e, c] : b.y.terms()) s.push_back(exponent_as_long(e));
  return s;
}

// The gcd-breaking induction, without the leading-order check. Shared by
// characteristic_exponents and the inversion route.
CharExponents raw_exponents(const Branch& b) {
  if (b.d == 1) return CharExponents{{1}};
  std::vector<long> support = support_of(b);
  std::vector<long> beta = {b.d};
  long e = b.d;
  for (long k : support) {
    if (e == 1) break;
    if (k % e != 0) {
      beta.push_back(k);
      e = igcd(e, k);
    }
  }
  if (e != 1) {
    if (b.y.trunc()) {
      fail_precision("characteristic exponents: gcd chain did not reach 1 below "
                     "the truncation order");
    }
    fail_pre("DegenerateInput",
             "branch is not irreducible: gcd of ramification and support is " +
                 std::to_string(e));
  }
  return CharExponents{std::move(beta)};
}

// Pairwise shape only (coprime, m >= 1, n >= 2); inversion accepts pair lists
// from either orientation of the parametrization, where the valuation
// monotonicity of the normalized form need not hold.
void validate_shape(const CharPairs& p) {
  for (const auto& [m, n] : p.pairs) {
    if (m < 1 || n < 2) {
      fail_pre("NotRealizable", "characteristic pair needs m >= 1, n >= 2");
    }
    if (igcd(m, n) != 1) {
      fail_pre("NotRealizable", "characteristic pair not coprime");
    }
  }
}

std::vector<std::pair<long, long>> invert_formula(const CharPairs& p) {
  const auto& q = p.pairs;
  std::vector<std::pair<long, long>> out;
  out.emplace_back(q[0].second, q[0].first);  // m'_1 = n_1, n'_1 = m_1
  long diff = q[0].first - q[0].second;       // m_1 - n_1
  long nprod = 1;
  for (size_t i = 1; i < q.size(); ++i) {
    nprod *= q[i].second;
    out.emplace_back(q[i].first - diff * nprod, q[i].second);
  }
  return out;
}

}  // namespace

Branch Branch::axis() {
  Branch b;
  b.d = 1;
  b.y = PuiseuxSeries::monomial(Rat(1), Cyclotomic(1));
  b.vertical = true;
  return b;
}

long Branch::leading_exponent() const {
  Valuation v = y.valuation();
  if (v.kind == Valuation::Indeterminate) {
    fail_precision("branch has no known y-terms below its truncation");
  }
  ROOTVAL_CHECK(v.is_finite(), "leading_exponent of an exactly-zero y series");
  return exponent_as_long(v.value);
}

std::string Branch::str() const {
  if (vertical) return "x = 0; y = t";
  std::ostringstream os;
  os << "x = t^" << d << "; y = " << y.str("t");
  return os.str();
}

void validate(const CharExponents& c) {
  if (c.beta.empty() || c.beta[0] < 1) {
    fail_pre("DegenerateInput", "characteristic exponents need beta_0 >= 1");
  }
  long e = c.beta[0];
  if (e == 1 && c.beta.size() > 1) {
    fail_pre("DegenerateInput", "beta_0 = 1 admits no further exponents");
  }
  for (size_t i = 1; i < c.beta.size(); ++i) {
    if (i > 1 && c.beta[i] <= c.beta[i - 1]) {
      fail_pre("DegenerateInput", "characteristic exponents must increase");
    }
    if (c.beta[i] % e == 0) {
      fail_pre("DegenerateInput",
               "beta_" + std::to_string(i) + " is divisible by e_" +
                   std::to_string(i - 1));
    }
    e = igcd(e, c.beta[i]);
  }
  if (e != 1) fail_pre("DegenerateInput", "gcd chain does not reach 1");
}

void validate(const CharPairs& p) {
  Rat prev(0);
  long nprod = 1;
  for (const auto& [m, n] : p.pairs) {
    if (m < 1 || n < 2) {
      fail_pre("NotRealizable", "characteristic pair needs m >= 1, n >= 2");
    }
    if (igcd(m, n) != 1) {
      fail_pre("NotRealizable", "characteristic pair not coprime");
    }
    nprod *= n;
    Rat ratio = rat(m, nprod);
    if (ratio <= prev) {
      fail_pre("NotRealizable", "pair valuations must strictly increase");
    }
    prev = ratio;
  }
}

CharExponents characteristic_exponents(const Branch& b) {
  if (b.vertical || b.d == 1) return CharExponents{{1}};
  Valuation v = b.y.valuation();
  if (v.kind == Valuation::Indeterminate) {
    fail_precision("characteristic exponents: no known y-terms");
  }
  if (v.kind == Valuation::Infinite) {
    fail_pre("DegenerateInput", "branch with zero y-series and d > 1 is reducible");
  }
  if (b.leading_exponent() < b.d) {
    fail_pre("OrderBelowRamification",
             "y-order " + std::to_string(b.leading_exponent()) +
                 " is below the ramification index " + std::to_string(b.d) +
                 "; invert the parametrization first");
  }
  return raw_exponents(b);
}

CharPairs characteristic_pairs(const CharExponents& c) {
  validate(c);
  CharPairs out;
  long e_prev = c.beta[0];
  for (size_t i = 1; i < c.beta.size(); ++i) {
    long e = igcd(e_prev, c.beta[i]);
    out.pairs.emplace_back(c.beta[i] / e, e_prev / e);
    e_prev = e;
  }
  return out;
}

CharExponents exponents_from_pairs(const CharPairs& p) {
  validate(p);
  if (p.pairs.empty()) return CharExponents{{1}};
  size_t g = p.pairs.size();
  // e_nu = n_{nu+1} ... n_g
  std::vector<long> e(g + 1, 1);
  for (size_t i = g; i-- > 0;) e[i] = e[i + 1] * p.pairs[i].second;
  CharExponents out;
  out.beta.push_back(e[0]);
  for (size_t i = 0; i < g; ++i) out.beta.push_back(p.pairs[i].first * e[i + 1]);
  validate(out);
  return out;
}

CharPairs pairs_from_root_valuations(const std::vector<Rat>& vals) {
  if (vals.empty()) {
    fail_pre("DegenerateInput", "pairs_from_root_valuations: empty input");
  }
  CharPairs out;
  Rat prev(0);
  long nprod = 1;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] <= prev) {
      fail_pre("DegenerateInput", "root valuations must be positive and strictly increasing");
    }
    prev = vals[i];
    Rat scaled = vals[i] * Rat(nprod);
    long m = num_long(scaled);
    long n = den_long(scaled);
    if (n == 1) {
      fail_pre("NotRealizable",
               "reduced denominator is 1 at stage " + std::to_string(i + 1));
    }
    out.pairs.emplace_back(m, n);
    nprod *= n;
  }
  validate(out);
  return out;
}

CharPairs invert_parametrization(const CharPairs& p) {
  if (p.pairs.empty()) {
    fail_pre("DegenerateInput", "invert_parametrization of empty pairs");
  }
  validate_shape(p);
  if (p.pairs[0].first == p.pairs[0].second) {
    fail_pre("DegenerateInput", "inversion needs m_1 != n_1");
  }
  CharPairs out{invert_formula(p)};
  validate_shape(out);  // throws NotRealizable when the swap is not defined
  return out;
}

CharPairs puiseux_char_pairs(const Branch& b) {
  if (b.vertical || b.d == 1) return CharPairs{};
  CharExponents raw = raw_exponents(b);
  CharPairs raw_pairs = characteristic_pairs(raw);
  if (b.leading_exponent() >= b.d) return raw_pairs;
  // Below-ramification case: apply the inversion formula; a leading pair with
  // n' = 1 carries no characteristic data and is dropped.
  auto inv = invert_formula(raw_pairs);
  if (!inv.empty() && inv[0].second == 1) inv.erase(inv.begin());
  CharPairs out{std::move(inv)};
  try {
    validate(out);
  } catch (const Error& e) {
    fail_internal("inversion route produced invalid pairs: " + e.detail());
  }
  return out;
}

Rat conjugate_difference_valuation(const Branch& b, long j) {
  if (b.vertical) fail_pre("DegenerateInput", "vertical branch has no conjugates");
  if (j < 1 || j >= b.d) {
    fail_pre("DegenerateInput", "conjugate index must satisfy 1 <= j <= d-1");
  }
  for (long k : support_of(b)) {
    if ((j * k) % b.d != 0) return rat(k, b.d);
  }
  if (b.y.trunc()) {
    fail_precision("conjugate_difference_valuation: support below truncation is "
                   "fixed by the twist");
  }
  fail_pre("DegenerateInput",
           "branch is reducible: its expansion equals its own conjugate");
}

std::vector<PuiseuxSeries> eigen_embeddings(const Branch& b, long common_ram) {
  if (b.vertical) {
    fail_pre("DegenerateInput", "vertical branch has no eigenvalue expansions");
  }
  long ram = common_ram > 0 ? ilcm(b.d, common_ram) : b.d;
  std::optional<Rat> trunc;
  if (b.y.trunc()) trunc = *b.y.trunc() / Rat(b.d);
  std::vector<PuiseuxSeries> out;
  for (long j = 0; j < b.d; ++j) {
    std::map<Rat, Cyclotomic> terms;
    for (const auto& [e, c] : b.y.terms()) {
      long k = num_long(e);  // integer exponent
      terms[rat(k, b.d)] =
          c * Cyclotomic::root_of_unity(static_cast<unsigned long>(b.d), j * k);
    }
    out.push_back(PuiseuxSeries::from_terms(std::move(terms), ram, trunc));
  }
  return out;
}

LocalQuotientCertificate branch_delta(const Branch& b) {
  if (b.vertical) {
    return {0, 1, LocalQuotientCertificate::Method::SemigroupGaps};
  }
  Valuation yv = b.y.valuation();
  if (yv.kind == Valuation::Indeterminate) {
    fail_precision("branch_delta: no known y-terms");
  }
  bool y_zero = yv.kind == Valuation::Infinite;
  if (y_zero && b.d > 1) {
    fail_pre("DegenerateInput", "branch with zero y-series and d > 1 is reducible");
  }
  long n0 = y_zero ? 0 : b.leading_exponent();
  if (!y_zero && n0 < 1) fail_pre("DegenerateInput", "branch needs y-order >= 1");

  // Irreducibility: the achieved orders generate a subgroup containing
  // gcd(d, support); anything > 1 makes delta infinite.
  {
    long g = b.d;
    for (long k : support_of(b)) g = igcd(g, k);
    if (g != 1) {
      if (b.y.trunc()) fail_precision("branch_delta: support so far has gcd > 1");
      fail_pre("DegenerateInput", "branch_delta: branch is not irreducible");
    }
  }

  PuiseuxSeries x = PuiseuxSeries::monomial(Rat(b.d), Cyclotomic(1));

  auto gaps_below = [&](long bound) -> std::vector<long> {
    // Span images of monomials x^a y^b with order bound `bound`.
    std::vector<std::map<long, Cyclotomic>> vecs;
    std::vector<PuiseuxSeries> ypow = {PuiseuxSeries::monomial(Rat(0), Cyclotomic(1))};
    long step_b = y_zero ? bound + 1 : n0;
    for (long bexp = 0; bexp * step_b < bound + 1; ++bexp) {
      if (bexp > 0) ypow.push_back(ypow.back() * b.y);
      for (long a = 0; a * b.d + bexp * step_b < bound + 1; ++a) {
        PuiseuxSeries img = ypow.back() * x.pow(a);
        if (img.trunc() && *img.trunc() < Rat(bound)) {
          fail_precision("branch_delta: monomial image known only modulo t^" +
                         to_string(*img.trunc()) + " < " + std::to_string(bound));
        }
        std::map<long, Cyclotomic> v;
        for (const auto& [e, c] : img.terms()) {
          long o = exponent_as_long(e);
          if (o < bound) v[o] = c;
        }
        vecs.push_back(std::move(v));
      }
    }
    std::set<long> pivots = echelon_pivot_orders(vecs, bound);
    std::vector<long> gaps;
    for (long o = 0; o < bound; ++o) {
      if (!pivots.count(o)) gaps.push_back(o);
    }
    return gaps;
  };

  const long ceiling = 4096;
  long N = 2 * b.d + 2 * std::max<long>(n0, 1) + 2;
  while (N <= ceiling) {
    std::vector<long> gaps = gaps_below(N);
    long delta = static_cast<long>(gaps.size());
    bool tail_full = gaps.empty() || gaps.back() < 2 * delta;
    if (tail_full && N >= 2 * delta + b.d) {
      // Hard re-check at N + d before certifying.
      std::vector<long> gaps2 = gaps_below(N + b.d);
      if (static_cast<long>(gaps2.size()) == delta) {
        long below = 0;
        for (long g : gaps2) {
          if (g < 2 * delta) ++below;
        }
        ROOTVAL_CHECK(below == delta,
                      "branch_delta: Gorenstein conductor symmetry failed");
        return {delta, N, LocalQuotientCertificate::Method::SemigroupGaps};
      }
    }
    N += std::max<long>(b.d, 4);
  }
  fail_internal("branch_delta: no certificate below the search ceiling");
}

long intersection_number(const Branch& b1, const Branch& b2) {
  if (b1.vertical && b2.vertical) {
    fail_pre("NotDistinct", "both branches are the vertical axis");
  }
  if (b1.vertical || b2.vertical) {
    // i(x = 0, (t^d, y)) = ord_t t^d = d.
    return b1.vertical ? b2.d : b1.d;
  }
  long L = ilcm(b1.d, b2.d);
  std::vector<PuiseuxSeries> u = eigen_embeddings(b1, L);
  std::vector<PuiseuxSeries> v = eigen_embeddings(b2, L);
  Rat total(0);
  for (const auto& uk : u) {
    for (const auto& vl : v) {
      Valuation val = difference_valuation(uk, vl);
      if (val.kind == Valuation::Infinite) {
        fail_pre("NotDistinct", "branches share a conjugate expansion");
      }
      if (val.kind == Valuation::Indeterminate) {
        fail_precision("intersection_number: a pairwise difference vanishes to "
                       "the joint truncation");
      }
      total += val.value;
    }
  }
  ROOTVAL_CHECK(is_integer(total),
                "Halphen-Zeuthen sum is not an integer: " + to_string(total));
  long result = num_long(total);
  ROOTVAL_CHECK(result > 0, "intersection number must be positive");
  return result;
}

}  // namespace rootval
