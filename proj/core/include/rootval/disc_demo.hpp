#pragma once

#include <optional>
#include <vector>

#include "rootval/sparse_poly.hpp"

namespace rootval {

// Miniversal deformation of y^2 - x^n with its discriminant parametrization:
// F = y^2 - (x^n + a2 x^{n-2} + ... + an), phi[k] is the image of a_{k+2}
// under the singular-locus parametrization (identity on a2..a_{n-2}, then the
// two closed forms in x).
struct MiniversalAn {
  long n = 2;
  SparsePoly F;
  std::vector<SparsePoly> phi;
};

// 2 <= n <= 9; the parametrization identities are verified symbolically at
// construction.
MiniversalAn build_miniversal(long n);

// Polynomial in a2..an cutting out the image of phi: the resultant of the
// deformed x-polynomial and its x-derivative, content-free with positive
// leading coefficient in graded lex order.
SparsePoly discriminant_polynomial(const MiniversalAn& m);

struct NashReport {
  long n = 0;
  bool rank_ok = false;            // n-2 on the critical locus, n-1 off it
  bool hyperplane_only_x = false;  // image hyperplane ignores the a-values
  bool injective = false;          // distinct x give distinct hyperplanes
  std::optional<Rat> failed_sample;
  std::vector<std::vector<Rat>> normals;  // hyperplane normal per sample
};

// Exact checks behind the smoothness of the Nash blow-up of the
// discriminant: rank of the deformation Jacobian, dependence of its image on
// x alone, and recoverability of x from the image. Needs n >= 3; samples must
// be nonzero and pairwise distinct.
NashReport verify_rank_and_nash(const MiniversalAn& m,
                                const std::vector<Rat>& samples);

}  // namespace rootval
