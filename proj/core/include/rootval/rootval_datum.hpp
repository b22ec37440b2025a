#pragma once

#include <vector>

#include "rootval/branch.hpp"
#include "rootval/rational.hpp"

namespace rootval {

// The pair (w, r): w permutes the eigenvalue expansions as the Galois
// generator does, r records the valuation of each pairwise difference.
// Indices are 0-based; w[i] is the image of i.
struct RootValuationDatum {
  long d = 0;
  std::vector<long> w;
  std::vector<std::vector<Rat>> r;  // symmetric, diagonal unused (0)
};

// Validates permutation shape, symmetry, the ultrametric inequality and
// w-equivariance (r invariant under applying w to both indices).
RootValuationDatum make_root_valuation_datum(std::vector<long> w,
                                             std::vector<std::vector<Rat>> r);

// Datum of a list of pairwise distinct branches: one cycle per branch, r from
// difference valuations over the common ramification frame.
RootValuationDatum root_valuation_datum(const std::vector<Branch>& branches);

// Disjoint cycles of w, each rotated to start at its least element, sorted by
// that element; fixed points included as singletons.
std::vector<std::vector<long>> cycles_of(const std::vector<long>& w);

// True iff some relabeling sigma carries a to b exactly. Decided by lex-least
// canonical encoding with cycle-type pruning; sizes above 10 are refused with
// CapExceeded.
bool equal_root_valuation(const RootValuationDatum& a,
                          const RootValuationDatum& b);

}  // namespace rootval
