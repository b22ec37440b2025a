#pragma once

#include <vector>

#include "rootval/branch.hpp"
#include "rootval/matrix_series.hpp"
#include "rootval/puiseux.hpp"
#include "rootval/sparse_poly.hpp"

namespace rootval {

// All fractional-power expansions of the roots of the monic squarefree
// polynomial p (coefficients indexed by power of the root variable, leading
// entry 1), developed modulo eps^N. One series per root, counted with the
// degree. Edge polynomials are solved exactly only when they are linear or
// quadratic over the current cyclotomic field, pure binomials, or split over
// Q; anything else raises UnsupportedCoefficientField.
std::vector<PuiseuxSeries> puiseux_expansions(const std::vector<PuiseuxSeries>& p,
                                              const Rat& N);

// Expansions grouped into Galois orbits, one Branch per orbit; branch.d is
// the orbit size and branch.y the representative read in t = eps^{1/d}.
std::vector<Branch> newton_puiseux(const std::vector<PuiseuxSeries>& p,
                                   const Rat& N);

// Branches of the characteristic polynomial of g. NotRegularSemisimple when a
// repeated eigenvalue is certified at this precision.
std::vector<Branch> eigen_expansions(const MatrixSeries& g, long N);

// Branch decomposition of a reduced plane germ f(x, y) at the origin: at most
// one factor of x (as the vertical branch), then the expansions of the
// y-polynomial, which must have a constant leading y-coefficient.
std::vector<Branch> germ_branches(const SparsePoly& f, long N);

}  // namespace rootval
