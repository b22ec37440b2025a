#include "rootval/rational.hpp"

#include <climits>

#include "rootval/errors.hpp"

namespace rootval {

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s);
      return Rat(n);
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) return std::nullopt;
    Rat q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

long to_long(const Int& z) {
  ROOTVAL_CHECK(z.fits_slong_p(), "integer out of machine range: " + z.get_str());
  return z.get_si();
}

long igcd(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long ilcm(long a, long b) {
  if (a == 0 || b == 0) return 0;
  long g = igcd(a, b);
  Int l = Int(a / g) * Int(b);
  long r = to_long(l);
  return r < 0 ? -r : r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), k);
  if (inv) {
    ROOTVAL_CHECK(n != 0, "pow_rat: zero to a negative power");
    std::swap(n, d);
  }
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::optional<Int> iroot_exact(const Int& z, unsigned long q) {
  if (q == 0) return std::nullopt;
  if (q % 2 == 0 && z < 0) return std::nullopt;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), q);
  if (!exact) return std::nullopt;
  return r;
}

std::optional<Rat> rat_root_exact(const Rat& q, unsigned long k) {
  auto n = iroot_exact(Int(q.get_num()), k);
  if (!n) return std::nullopt;
  auto d = iroot_exact(Int(q.get_den()), k);
  if (!d) return std::nullopt;
  Rat r(*n, *d);
  r.canonicalize();
  return r;
}

}  // namespace rootval
