#pragma once

#include <vector>

#include "rootval/branch.hpp"
#include "rootval/certificate.hpp"
#include "rootval/sparse_poly.hpp"

namespace rootval {

// dim Q[x,y]/(f_x, f_y), certified by two-point agreement in the truncation
// degree plus membership of every monomial of degree D-1 in the ideal plus
// m^D. Value 0 means the origin is not a singular point of f.
LocalQuotientCertificate milnor_number(const SparsePoly& f);

// dim Q[x,y]/(f, f_x, f_y); asserts tau <= mu.
LocalQuotientCertificate tjurina_number(const SparsePoly& f);

// delta-invariant as the codimension of the coordinate ring inside its
// normalization, truncated at t^N per branch. The branch list must be a
// complete factorization of f at the origin (checked by degree count).
LocalQuotientCertificate delta_from_poly(const SparsePoly& f,
                                         const std::vector<Branch>& branches);

}  // namespace rootval
