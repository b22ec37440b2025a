#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace rootval {

// Exact arbitrary-precision arithmetic. All coefficient and exponent
// arithmetic in the library goes through these types; no floating point.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& n, const Int& d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

// Serialized as "p" or "p/q"; this is the wire format for rationals.
std::string to_string(const Rat& q);

std::optional<Rat> parse_rat(const std::string& s);

long to_long(const Int& z);

inline long num_long(const Rat& q) { return to_long(Int(q.get_num())); }
inline long den_long(const Rat& q) { return to_long(Int(q.get_den())); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

long igcd(long a, long b);
long ilcm(long a, long b);

Rat pow_rat(const Rat& base, long e);

// Exact integer q-th root, or nullopt if z is not a perfect q-th power.
// For even q, z must be non-negative.
std::optional<Int> iroot_exact(const Int& z, unsigned long q);

// Exact rational q-th root of a non-negative rational, if one exists.
std::optional<Rat> rat_root_exact(const Rat& q, unsigned long k);

}  // namespace rootval
