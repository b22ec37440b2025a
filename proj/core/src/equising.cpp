#include "rootval/equising.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rootval/errors.hpp"
#include "rootval/newton_puiseux.hpp"

namespace rootval {

EquisingularityDatum equisingularity_datum(const std::vector<Branch>& branches) {
  if (branches.empty()) fail_pre("DegenerateInput", "no branches given");
  EquisingularityDatum e;
  long r = static_cast<long>(branches.size());
  for (const auto& b : branches) e.branches.push_back(puiseux_char_pairs(b));
  e.inter.assign(r, std::vector<long>(r, 0));
  for (long i = 0; i < r; ++i) {
    for (long j = i + 1; j < r; ++j) {
      long n = intersection_number(branches[i], branches[j]);
      e.inter[i][j] = n;
      e.inter[j][i] = n;
    }
  }
  return e;
}

bool equal_equisingularity(const EquisingularityDatum& a,
                           const EquisingularityDatum& b) {
  return equisingularity_bijection(a, b).has_value();
}

std::optional<std::vector<long>> equisingularity_bijection(
    const EquisingularityDatum& a, const EquisingularityDatum& b) {
  size_t r = a.branches.size();
  if (r != b.branches.size()) return std::nullopt;
  if (a.inter.size() != r || b.inter.size() != r) {
    fail_pre("SizeMismatch", "intersection matrix does not match branch count");
  }
  // multiset of pairs must agree before any bijection can work
  {
    std::map<CharPairs, long> ca, cb;
    for (const auto& p : a.branches) ++ca[p];
    for (const auto& p : b.branches) ++cb[p];
    if (ca != cb) return std::nullopt;
  }
  std::vector<long> img(r, -1);  // a-index -> b-index
  std::vector<bool> taken(r, false);
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == r) return true;
    for (size_t j = 0; j < r; ++j) {
      if (taken[j] || !(a.branches[i] == b.branches[j])) continue;
      bool ok = true;
      for (size_t k = 0; k < i && ok; ++k) {
        if (a.inter[i][k] != b.inter[j][img[k]]) ok = false;
      }
      if (!ok) continue;
      img[i] = static_cast<long>(j);
      taken[j] = true;
      if (rec(i + 1)) return true;
      taken[j] = false;
      img[i] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return img;
}

AggregateInvariants aggregate_invariants(const EquisingularityDatum& e) {
  if (e.branches.empty()) fail_pre("DegenerateInput", "empty datum");
  long r = static_cast<long>(e.branches.size());
  if (static_cast<long>(e.inter.size()) != r) {
    fail_pre("SizeMismatch", "intersection matrix does not match branch count");
  }
  AggregateInvariants out;
  out.branches = r;
  for (const auto& p : e.branches) {
    // unit-coefficient representative: x = t^{beta_0}, y = sum_nu t^{beta_nu}
    CharExponents c = exponents_from_pairs(p);
    Branch b;
    b.d = c.beta[0];
    std::map<Rat, Cyclotomic> terms;
    for (size_t i = 1; i < c.beta.size(); ++i) terms[Rat(c.beta[i])] = Cyclotomic(1);
    b.y = PuiseuxSeries::from_terms(std::move(terms), 1);
    out.delta += branch_delta(b).value;
  }
  for (long i = 0; i < r; ++i) {
    for (long j = i + 1; j < r; ++j) {
      if (e.inter[i][j] != e.inter[j][i] || e.inter[i][j] < 1) {
        fail_pre("DegenerateInput", "intersection matrix must be symmetric "
                                    "with positive off-diagonal entries");
      }
      out.delta += e.inter[i][j];
    }
  }
  out.milnor = 2 * out.delta - r + 1;
  return out;
}

GkmReport verify_gkm_lemma(const MatrixSeries& g1, const MatrixSeries& g2,
                           long precision) {
  std::vector<Branch> b1 = eigen_expansions(g1, precision);
  std::vector<Branch> b2 = eigen_expansions(g2, precision);
  GkmReport rep;
  rep.rv1 = root_valuation_datum(b1);
  rep.rv2 = root_valuation_datum(b2);
  rep.eq1 = equisingularity_datum(b1);
  rep.eq2 = equisingularity_datum(b2);
  rep.rootval_equal = equal_root_valuation(rep.rv1, rep.rv2);
  rep.equising_equal = equal_equisingularity(rep.eq1, rep.eq2);
  rep.implication_holds = !rep.rootval_equal || rep.equising_equal;
  return rep;
}

}  // namespace rootval
