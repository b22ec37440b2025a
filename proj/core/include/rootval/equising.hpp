#pragma once

#include <optional>
#include <vector>

#include "rootval/branch.hpp"
#include "rootval/matrix_series.hpp"
#include "rootval/rootval_datum.hpp"

namespace rootval {

// Topological type of a multi-branch germ: per-branch characteristic pairs
// plus the pairwise intersection matrix (diagonal unused).
struct EquisingularityDatum {
  std::vector<CharPairs> branches;
  std::vector<std::vector<long>> inter;
};

EquisingularityDatum equisingularity_datum(const std::vector<Branch>& branches);

// True iff some branch bijection matches the pairs exactly and conjugates the
// intersection matrices.
bool equal_equisingularity(const EquisingularityDatum& a,
                           const EquisingularityDatum& b);

// The witnessing bijection (a-index -> b-index) when the data are equal.
std::optional<std::vector<long>> equisingularity_bijection(
    const EquisingularityDatum& a, const EquisingularityDatum& b);

struct AggregateInvariants {
  long delta = 0;
  long branches = 0;
  long milnor = 0;
};

// delta = sum of per-branch deltas plus all pairwise intersections; milnor
// from the relation mu = 2 delta - r + 1. Per-branch deltas come from a
// standardized unit-coefficient parametrization rebuilt from the pairs.
AggregateInvariants aggregate_invariants(const EquisingularityDatum& e);

struct GkmReport {
  RootValuationDatum rv1, rv2;
  EquisingularityDatum eq1, eq2;
  bool rootval_equal = false;
  bool equising_equal = false;
  bool implication_holds = false;  // rootval_equal implies equising_equal
};

// Computes both data for both matrices and checks the one-directional
// implication: equal root valuation data force equal equisingularity data.
GkmReport verify_gkm_lemma(const MatrixSeries& g1, const MatrixSeries& g2,
                           long precision);

}  // namespace rootval
