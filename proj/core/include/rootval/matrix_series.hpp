#pragma once

#include <optional>
#include <vector>

#include "rootval/branch.hpp"
#include "rootval/puiseux.hpp"

namespace rootval {

// Square matrix over Laurent polynomials in eps with rational coefficients,
// known modulo eps^trunc (trunc absent = exact entries).
class MatrixSeries {
 public:
  MatrixSeries(std::vector<std::vector<PuiseuxSeries>> entries,
               std::optional<long> trunc = std::nullopt);

  long d() const { return d_; }
  const std::optional<long>& trunc() const { return trunc_; }
  const PuiseuxSeries& at(long i, long j) const { return entries_[i][j]; }
  const std::vector<std::vector<PuiseuxSeries>>& entries() const {
    return entries_;
  }

  // Monic characteristic polynomial, coefficients indexed by the power of the
  // eigenvalue variable (size d+1, leading entry 1). Faddeev-LeVerrier, so
  // only exact divisions by integers occur.
  std::vector<PuiseuxSeries> characteristic_polynomial() const;

 private:
  long d_;
  std::vector<std::vector<PuiseuxSeries>> entries_;
  std::optional<long> trunc_;
};

// Companion matrix of a monic polynomial with series coefficients. The
// coefficients must be rational Laurent polynomials in eps.
MatrixSeries companion_of(const std::vector<PuiseuxSeries>& monic);

// Block-diagonal companion matrix whose eigenvalue expansions are exactly the
// given branches. Each branch's minimal polynomial (product over its
// conjugates) must come out rational; this is automatic for rational branch
// coefficients.
MatrixSeries companion_from_branches(const std::vector<Branch>& branches);

}  // namespace rootval
