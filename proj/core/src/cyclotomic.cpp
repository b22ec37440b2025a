#include "rootval/cyclotomic.hpp"

#include <map>
#include <sstream>

#include "rootval/errors.hpp"

namespace rootval {

namespace {

using Poly = std::vector<Rat>;  // dense, index = degree

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic divisor.
Poly rem_monic(Poly p, const Poly& div) {
  trim(p);
  long n = static_cast<long>(div.size()) - 1;
  ROOTVAL_CHECK(n >= 0 && div.back() == 1, "rem_monic: divisor not monic");
  while (static_cast<long>(p.size()) - 1 >= n) {
    Rat lead = p.back();
    long shift = static_cast<long>(p.size()) - 1 - n;
    if (lead != 0) {
      for (long i = 0; i <= n; ++i) p[shift + i] -= lead * div[i];
    }
    p.pop_back();
    trim(p);
  }
  return p;
}

// Quotient of p by a monic divisor, remainder must vanish.
Poly div_exact_monic(Poly p, const Poly& div) {
  trim(p);
  long n = static_cast<long>(div.size()) - 1;
  if (p.empty()) return {};
  long qdeg = static_cast<long>(p.size()) - 1 - n;
  ROOTVAL_CHECK(qdeg >= 0, "div_exact_monic: degree too small");
  Poly q(qdeg + 1, Rat(0));
  for (long d = qdeg; d >= 0; --d) {
    Rat lead = (static_cast<long>(p.size()) - 1 == d + n) ? p.back() : Rat(0);
    q[d] = lead;
    if (lead != 0) {
      for (long i = 0; i <= n; ++i) p[d + i] -= lead * div[i];
    }
    trim(p);
  }
  ROOTVAL_CHECK(p.empty(), "div_exact_monic: nonzero remainder");
  return q;
}

}  // namespace

unsigned long Cyclotomic::euler_phi(unsigned long m) {
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Int>& Cyclotomic::cyclotomic_polynomial(unsigned long m) {
  static std::map<unsigned long, std::vector<Int>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // (x^m - 1) / prod_{d | m, d < m} Phi_d
  Poly p(m + 1, Rat(0));
  p[0] = Rat(-1);
  p[m] = Rat(1);
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& phid = cyclotomic_polynomial(d);
    Poly divq(phid.size());
    for (size_t i = 0; i < phid.size(); ++i) divq[i] = Rat(phid[i]);
    p = div_exact_monic(std::move(p), divq);
  }
  std::vector<Int> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    ROOTVAL_CHECK(is_integer(p[i]), "cyclotomic polynomial not integral");
    out[i] = p[i].get_num();
  }
  return cache.emplace(m, std::move(out)).first->second;
}

namespace {

Poly phi_as_poly(unsigned long m) {
  const auto& z = Cyclotomic::cyclotomic_polynomial(m);
  Poly p(z.size());
  for (size_t i = 0; i < z.size(); ++i) p[i] = Rat(z[i]);
  return p;
}

}  // namespace

void Cyclotomic::compress() {
  if (order_ == 1) return;
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return;
  }
  Rat c = coeffs_[0];
  order_ = 1;
  coeffs_.assign(1, c);
}

Cyclotomic Cyclotomic::root_of_unity(unsigned long order, long power) {
  if (order == 0) fail_pre("DegenerateInput", "root_of_unity: order must be positive");
  long k = power % static_cast<long>(order);
  if (k < 0) k += static_cast<long>(order);
  Poly p(k + 1, Rat(0));
  p[k] = Rat(1);
  p = rem_monic(std::move(p), phi_as_poly(order));
  Cyclotomic c;
  c.order_ = order;
  c.coeffs_.assign(euler_phi(order), Rat(0));
  for (size_t i = 0; i < p.size(); ++i) c.coeffs_[i] = p[i];
  c.compress();
  return c;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rat Cyclotomic::rational_value() const {
  ROOTVAL_CHECK(is_rational(), "rational_value on a non-rational element");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned long new_order) const {
  ROOTVAL_CHECK(new_order % order_ == 0, "embedded: order must divide new order");
  if (new_order == order_) return *this;
  unsigned long step = new_order / order_;
  Poly p;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    size_t deg = i * step;
    if (p.size() <= deg) p.resize(deg + 1, Rat(0));
    p[deg] = coeffs_[i];
  }
  p = rem_monic(std::move(p), phi_as_poly(new_order));
  Cyclotomic c;
  c.order_ = new_order;
  c.coeffs_.assign(euler_phi(new_order), Rat(0));
  for (size_t i = 0; i < p.size(); ++i) c.coeffs_[i] = p[i];
  return c;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic c = *this;
  for (auto& q : c.coeffs_) q = -q;
  return c;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned long m = ilcm(static_cast<long>(a.order_), static_cast<long>(b.order_));
  Cyclotomic x = a.embedded(m);
  Cyclotomic y = b.embedded(m);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  x.compress();
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned long m = ilcm(static_cast<long>(a.order_), static_cast<long>(b.order_));
  Cyclotomic x = a.embedded(m);
  Cyclotomic y = b.embedded(m);
  Poly prod(x.coeffs_.size() + y.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  prod = rem_monic(std::move(prod), phi_as_poly(m));
  Cyclotomic c;
  c.order_ = m;
  c.coeffs_.assign(Cyclotomic::euler_phi(m), Rat(0));
  for (size_t i = 0; i < prod.size(); ++i) c.coeffs_[i] = prod[i];
  c.compress();
  return c;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail_pre("DegenerateInput", "inverse of zero");
  if (is_rational()) return Cyclotomic(Rat(1) / coeffs_[0]);
  // Extended Euclid: find u with u * a = 1 mod Phi_m.
  Poly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  Poly b = phi_as_poly(order_);
  Poly r0 = b, r1 = a;
  Poly s0 = {}, s1 = {Rat(1)};  // s_i tracks coefficient of a
  while (!r1.empty()) {
    // divide r0 by r1
    Poly q;
    Poly rem = r0;
    trim(rem);
    long dn = static_cast<long>(r1.size()) - 1;
    Rat lead1 = r1.back();
    while (static_cast<long>(rem.size()) - 1 >= dn) {
      long shift = static_cast<long>(rem.size()) - 1 - dn;
      Rat c = rem.back() / lead1;
      if (q.size() <= static_cast<size_t>(shift)) q.resize(shift + 1, Rat(0));
      q[shift] += c;
      for (long i = 0; i <= dn; ++i) rem[shift + i] -= c * r1[i];
      trim(rem);
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    Poly qs(q.size() + s1.size(), Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    trim(qs);
    Poly snew = s0;
    if (snew.size() < qs.size()) snew.resize(qs.size(), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) snew[i] -= qs[i];
    trim(snew);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  // r0 is the gcd, a nonzero constant since Phi_m is irreducible and a != 0 mod Phi_m.
  ROOTVAL_CHECK(r0.size() == 1 && r0[0] != 0, "cyclotomic inverse: gcd not a unit");
  Cyclotomic inv;
  inv.order_ = order_;
  inv.coeffs_.assign(euler_phi(order_), Rat(0));
  for (size_t i = 0; i < s0.size(); ++i) inv.coeffs_[i] = s0[i] / r0[0];
  inv.compress();
  return inv;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  return a * b.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned long m = ilcm(static_cast<long>(a.order_), static_cast<long>(b.order_));
  Cyclotomic x = a.embedded(m);
  Cyclotomic y = b.embedded(m);
  return x.coeffs_ == y.coeffs_;
}

std::optional<std::pair<Rat, long>> Cyclotomic::as_rational_times_root() const {
  if (is_rational()) return std::make_pair(coeffs_[0], 0L);
  for (unsigned long k = 1; k < order_; ++k) {
    Cyclotomic t = *this * root_of_unity(order_, -static_cast<long>(k));
    if (t.is_rational()) return std::make_pair(t.rational_value(), static_cast<long>(k));
  }
  return std::nullopt;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(coeffs_[i]);
    if (i > 0) os << "*z" << order_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace rootval
