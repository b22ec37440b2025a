#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootval/rational.hpp"

namespace rootval {

// An element of the cyclotomic field Q(zeta_m), stored in the power basis
// 1, zeta, ..., zeta^{phi(m)-1}. Representations are kept reduced modulo the
// m-th cyclotomic polynomial, so the coordinates are canonical for a fixed m.
// Equality across different orders goes through embedding into the lcm.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rat(0)) {}
  Cyclotomic(long n) : Cyclotomic(Rat(n)) {}
  explicit Cyclotomic(const Rat& q) : order_(1), coeffs_(1, q) {}

  // zeta_order^power
  static Cyclotomic root_of_unity(unsigned long order, long power = 1);

  unsigned long order() const { return order_; }
  const std::vector<Rat>& coords() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()

  // order() must divide new_order
  Cyclotomic embedded(unsigned long new_order) const;

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;  // requires nonzero

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  // If the element equals r * zeta_m^k for a rational r, return (r, k).
  std::optional<std::pair<Rat, long>> as_rational_times_root() const;

  std::string str() const;

  static unsigned long euler_phi(unsigned long m);
  // Coefficients of the m-th cyclotomic polynomial, degree phi(m), monic.
  static const std::vector<Int>& cyclotomic_polynomial(unsigned long m);

 private:
  // Drops to order 1 when the element is rational; keeps orders small.
  void compress();

  unsigned long order_;
  std::vector<Rat> coeffs_;  // length phi(order_)
};

}  // namespace rootval
