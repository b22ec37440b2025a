#pragma once

#include <string>

#include "rootval/branch.hpp"
#include "rootval/matrix_series.hpp"
#include "rootval/sparse_poly.hpp"

namespace rootval {

// Terms over x, y and a2..a9, integer or slash-rational coefficients,
// operators + - * ^ and parentheses; whitespace insignificant.
// SyntaxError carries the byte offset; unknown identifiers raise
// UnknownVariable.
SparsePoly parse_polynomial(const std::string& src);

// "x = t^<int>; y = <poly in t>" with optional "; trunc=<int>" (default:
// highest given exponent + 1). "x = 0; y = t" is the vertical branch.
Branch parse_branch(const std::string& src);

// "d=<int>; trunc=<int>;" then d^2 entries as polynomials in the symbol e,
// row-major, semicolon-separated.
MatrixSeries parse_matrix(const std::string& src);

// Canonical text forms; re-parsing yields an equal object.
std::string branch_text(const Branch& b);
std::string matrix_text(const MatrixSeries& m);

}  // namespace rootval
