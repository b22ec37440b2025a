#pragma once

#include <map>
#include <optional>
#include <string>

#include "rootval/cyclotomic.hpp"
#include "rootval/rational.hpp"

namespace rootval {

// Result of asking for the order of a truncated series. A series with no
// stored terms below a finite truncation is zero as far as we know, but not
// certified zero; its valuation is Indeterminate, never guessed.
struct Valuation {
  enum Kind { Finite, Infinite, Indeterminate };

  Kind kind;
  Rat value;  // meaningful only when kind == Finite

  static Valuation finite(const Rat& v) { return {Finite, v}; }
  static Valuation infinite() { return {Infinite, Rat(0)}; }
  static Valuation indeterminate() { return {Indeterminate, Rat(0)}; }

  bool is_finite() const { return kind == Finite; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.kind == b.kind && (a.kind != Finite || a.value == b.value);
  }
};

// Finitely supported Puiseux series with explicit truncation: terms with
// exponent >= trunc are unknown, not zero. trunc = nullopt means the series
// is known exactly (all omitted terms are zero). Exponents are rationals
// whose denominators divide the ramification index.
class PuiseuxSeries {
 public:
  PuiseuxSeries() : ram_(1) {}  // exact zero

  static PuiseuxSeries zero(long ram, std::optional<Rat> trunc = std::nullopt);
  static PuiseuxSeries monomial(const Rat& exponent, const Cyclotomic& coeff,
                                long ram = 0,
                                std::optional<Rat> trunc = std::nullopt);
  static PuiseuxSeries from_terms(std::map<Rat, Cyclotomic> terms, long ram = 0,
                                  std::optional<Rat> trunc = std::nullopt);

  long ram() const { return ram_; }
  const std::map<Rat, Cyclotomic>& terms() const { return terms_; }
  const std::optional<Rat>& trunc() const { return trunc_; }

  bool known_zero() const { return terms_.empty() && !trunc_; }
  bool has_terms() const { return !terms_.empty(); }

  Valuation valuation() const;
  Cyclotomic coefficient(const Rat& exponent) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

  PuiseuxSeries scaled(const Cyclotomic& c) const;
  PuiseuxSeries shifted(const Rat& e) const;  // multiply by eps^e
  PuiseuxSeries truncated(const Rat& t) const;
  PuiseuxSeries with_ram(long r) const;  // widen to lcm(ram, r)
  PuiseuxSeries pow(long k) const;       // k >= 0

  // Galois twist eps^{1/ram} -> zeta_ram^j eps^{1/ram}.
  PuiseuxSeries twisted(long j) const;

  // Substitute eps -> eps^k (exponents scale by k), k >= 1.
  PuiseuxSeries stretched(long k) const;

  // Reciprocal, valid modulo eps^min(prec, trunc - 2 val). Requires a
  // determinate leading term.
  PuiseuxSeries inverse(const Rat& prec) const;

  // Equal as known data (same terms and same truncation after widening).
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

  std::string str(const std::string& var = "e") const;

 private:
  void normalize();

  long ram_;
  std::map<Rat, Cyclotomic> terms_;
  std::optional<Rat> trunc_;
};

// val(s1 - s2); Indeterminate if the difference vanishes below the joint
// truncation, Infinite if it is certified zero.
Valuation difference_valuation(const PuiseuxSeries& s1, const PuiseuxSeries& s2);

}  // namespace rootval
