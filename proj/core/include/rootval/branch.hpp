#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootval/certificate.hpp"
#include "rootval/puiseux.hpp"

namespace rootval {

// One irreducible component of a plane-curve germ, parametrized as
// x = t^d, y = sum a_k t^k (a series in t with integer exponents), or the
// y-axis x = 0 when `vertical` is set (then d = 1 and y = t implicitly).
struct Branch {
  long d = 1;
  PuiseuxSeries y;  // series in t; integer exponents; trunc carried here
  bool vertical = false;

  static Branch axis();  // the vertical branch x = 0

  // t-exponent of the first y-term; fails on the zero series with finite trunc.
  long leading_exponent() const;

  std::string str() const;
};

// Puiseux characteristic (beta_0; beta_1, ..., beta_g).
struct CharExponents {
  std::vector<long> beta;

  friend bool operator==(const CharExponents& a, const CharExponents& b) {
    return a.beta == b.beta;
  }
};

// Coprime pairs (m_nu, n_nu); empty for a smooth branch.
struct CharPairs {
  std::vector<std::pair<long, long>> pairs;

  friend bool operator==(const CharPairs& a, const CharPairs& b) {
    return a.pairs == b.pairs;
  }
  friend bool operator<(const CharPairs& a, const CharPairs& b) {
    return a.pairs < b.pairs;
  }
};

void validate(const CharExponents& c);
void validate(const CharPairs& p);

// The inductive gcd-breaking extraction. Requires leading exponent >= d; use
// puiseux_char_pairs for the automatic inversion route.
CharExponents characteristic_exponents(const Branch& b);

CharPairs characteristic_pairs(const CharExponents& c);
CharExponents exponents_from_pairs(const CharPairs& p);

// Recover pairs from the strictly increasing valuations m_nu / (n_1...n_nu).
CharPairs pairs_from_root_valuations(const std::vector<Rat>& vals);

// Swap the roles of x and y. Errors when the swapped pairs would be invalid.
CharPairs invert_parametrization(const CharPairs& p);

// Characteristic pairs of the branch in its Puiseux normalization, routing
// through the inversion formula when the y-order is below the ramification.
CharPairs puiseux_char_pairs(const Branch& b);

// val(y(zeta^j t) - y(t)) in x-units, read off the support: the least k/d
// with a_k != 0 and jk not divisible by d.
Rat conjugate_difference_valuation(const Branch& b, long j);

// The d conjugate eigenvalue expansions of the branch as Puiseux series in
// eps = x, exponents k/d, widened to ramification common_ram (d | common_ram).
std::vector<PuiseuxSeries> eigen_embeddings(const Branch& b, long common_ram = 0);

// delta-invariant of one branch via the valuation-semigroup echelon oracle,
// certified by conductor self-consistency (every order in [2 delta, N) is
// achieved and N >= 2 delta + d, re-checked at N + d).
LocalQuotientCertificate branch_delta(const Branch& b);

// Halphen-Zeuthen: sum of valuations of pairwise differences of conjugate
// expansions over the common ramification frame. Positive integer.
long intersection_number(const Branch& b1, const Branch& b2);

}  // namespace rootval
