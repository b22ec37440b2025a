#pragma once

#include <map>
#include <set>
#include <vector>

#include "rootval/cyclotomic.hpp"
#include "rootval/rational.hpp"

namespace rootval {

// Leading orders (smallest order with a nonzero entry) of an echelon basis of
// the span of the given vectors; equivalently, the set of orders realized by
// elements of the span. Entries at order >= bound are ignored.
std::set<long> echelon_pivot_orders(const std::vector<std::map<long, Rat>>& vecs,
                                    long bound);

std::set<long> echelon_pivot_orders(
    const std::vector<std::map<long, Cyclotomic>>& vecs, long bound);

// Rank of a dense matrix over Q (Gaussian elimination, exact).
long rank_of(std::vector<std::vector<Rat>> m);

// Basis of { v : m v = 0 }. Used for hyperplane normals in the demo.
std::vector<std::vector<Rat>> right_kernel(std::vector<std::vector<Rat>> m);

}  // namespace rootval
