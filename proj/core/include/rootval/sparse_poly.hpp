#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rootval/puiseux.hpp"
#include "rootval/rational.hpp"

namespace rootval {

// Exponent vector, variable name -> positive exponent.
using Monomial = std::map<std::string, unsigned long>;

// Exact sparse multivariate polynomial over Q. Hosts germs f(x,y),
// characteristic polynomials, and the deformation family of the demo.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(const Rat& c);
  SparsePoly(long c) : SparsePoly(Rat(c)) {}

  static SparsePoly variable(const std::string& name, unsigned long exp = 1);
  static SparsePoly term(const Rat& coeff, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  std::set<std::string> variables() const;

  long degree(const std::string& var) const;  // -1 for the zero polynomial
  long total_degree() const;                  // -1 for the zero polynomial

  // Coefficient of var^k, a polynomial in the remaining variables.
  SparsePoly coefficient_of(const std::string& var, unsigned long k) const;

  SparsePoly derivative(const std::string& var) const;
  SparsePoly substituted(const std::string& var, const SparsePoly& value) const;
  Rat evaluated(const std::map<std::string, Rat>& point) const;
  PuiseuxSeries eval_series(const std::map<std::string, PuiseuxSeries>& point) const;

  SparsePoly operator-() const;
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly& operator+=(const SparsePoly& b) { return *this = *this + b; }
  SparsePoly& operator-=(const SparsePoly& b) { return *this = *this - b; }
  SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) {
    return !(a == b);
  }

  SparsePoly pow(unsigned long k) const;

  // Leading term under graded lexicographic order.
  std::pair<Monomial, Rat> leading_term() const;  // requires nonzero

  // Integer-content-free with positive deglex-leading coefficient.
  SparsePoly normalized_primitive() const;

  std::string str() const;  // canonical text form, re-parseable

 private:
  void prune();
  std::map<Monomial, Rat> terms_;
};

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<SparsePoly> try_divide(const SparsePoly& a, const SparsePoly& b);

// Determinant by fraction-free Bareiss elimination; exact.
SparsePoly determinant(std::vector<std::vector<SparsePoly>> m);

// Sylvester resultant with respect to var, p-rows first (this fixes the
// sign convention: res_y(y^2 - x, y) = -x). DegenerateInput if p or q is zero.
SparsePoly resultant(const SparsePoly& p, const SparsePoly& q,
                     const std::string& var);

}  // namespace rootval
