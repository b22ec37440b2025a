#include "rootval/puiseux.hpp"

#include <sstream>

#include "rootval/errors.hpp"

namespace rootval {

namespace {

long exponent_denominator(const Rat& e) { return den_long(e); }

std::optional<Rat> min_trunc(const std::optional<Rat>& a,
                             const std::optional<Rat>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

void PuiseuxSeries::normalize() {
  if (ram_ < 1) fail_pre("DegenerateInput", "ramification index must be positive");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || (trunc_ && it->first >= *trunc_)) {
      it = terms_.erase(it);
    } else {
      ram_ = ilcm(ram_, exponent_denominator(it->first));
      ++it;
    }
  }
  if (trunc_) ram_ = ilcm(ram_, exponent_denominator(*trunc_));
}

PuiseuxSeries PuiseuxSeries::zero(long ram, std::optional<Rat> trunc) {
  PuiseuxSeries s;
  s.ram_ = ram;
  s.trunc_ = std::move(trunc);
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::monomial(const Rat& exponent, const Cyclotomic& coeff,
                                      long ram, std::optional<Rat> trunc) {
  PuiseuxSeries s;
  s.ram_ = ram > 0 ? ram : 1;
  s.trunc_ = std::move(trunc);
  if (!coeff.is_zero()) s.terms_[exponent] = coeff;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::from_terms(std::map<Rat, Cyclotomic> terms, long ram,
                                        std::optional<Rat> trunc) {
  PuiseuxSeries s;
  s.ram_ = ram > 0 ? ram : 1;
  s.terms_ = std::move(terms);
  s.trunc_ = std::move(trunc);
  s.normalize();
  return s;
}

Valuation PuiseuxSeries::valuation() const {
  if (!terms_.empty()) return Valuation::finite(terms_.begin()->first);
  if (!trunc_) return Valuation::infinite();
  return Valuation::indeterminate();
}

Cyclotomic PuiseuxSeries::coefficient(const Rat& exponent) const {
  auto it = terms_.find(exponent);
  if (it != terms_.end()) return it->second;
  if (trunc_ && exponent >= *trunc_) {
    fail_precision("coefficient at exponent " + to_string(exponent) +
                   " is beyond the truncation order " + to_string(*trunc_));
  }
  return Cyclotomic();
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries s = *this;
  for (auto& [e, c] : s.terms_) c = -c;
  return s;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries s;
  s.ram_ = ilcm(a.ram_, b.ram_);
  s.trunc_ = min_trunc(a.trunc_, b.trunc_);
  s.terms_ = a.terms_;
  for (const auto& [e, c] : b.terms_) {
    auto it = s.terms_.find(e);
    if (it == s.terms_.end()) {
      s.terms_[e] = c;
    } else {
      it->second += c;
    }
  }
  s.normalize();
  return s;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a + (-b);
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.known_zero() || b.known_zero()) return PuiseuxSeries();
  PuiseuxSeries s;
  s.ram_ = ilcm(a.ram_, b.ram_);
  // Lower bounds on the valuations; truncation shifts by the other factor's
  // valuation bound.
  auto low = [](const PuiseuxSeries& x) -> Rat {
    if (!x.terms_.empty()) return x.terms_.begin()->first;
    return *x.trunc_;  // no terms, finite trunc
  };
  std::optional<Rat> t;
  if (a.trunc_) t = min_trunc(t, Rat(*a.trunc_ + low(b)));
  if (b.trunc_) t = min_trunc(t, Rat(*b.trunc_ + low(a)));
  s.trunc_ = t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Rat e = ea + eb;
      if (t && e >= *t) continue;
      Cyclotomic prod = ca * cb;
      auto it = s.terms_.find(e);
      if (it == s.terms_.end()) {
        s.terms_[e] = prod;
      } else {
        it->second += prod;
      }
    }
  }
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return PuiseuxSeries::zero(ram_, trunc_);
  PuiseuxSeries s = *this;
  for (auto& [e, q] : s.terms_) q *= c;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rat& e) const {
  PuiseuxSeries s;
  s.ram_ = ram_;
  if (trunc_) s.trunc_ = *trunc_ + e;
  for (const auto& [ex, c] : terms_) s.terms_[ex + e] = c;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rat& t) const {
  PuiseuxSeries s = *this;
  s.trunc_ = trunc_ ? std::min(*trunc_, t) : t;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::with_ram(long r) const {
  PuiseuxSeries s = *this;
  s.ram_ = ilcm(ram_, r);
  return s;
}

PuiseuxSeries PuiseuxSeries::pow(long k) const {
  ROOTVAL_CHECK(k >= 0, "pow: negative exponent");
  PuiseuxSeries acc = PuiseuxSeries::monomial(Rat(0), Cyclotomic(1), ram_);
  PuiseuxSeries base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

PuiseuxSeries PuiseuxSeries::twisted(long j) const {
  PuiseuxSeries s;
  s.ram_ = ram_;
  s.trunc_ = trunc_;
  for (const auto& [e, c] : terms_) {
    Rat scaled_exp = e * Rat(ram_);
    ROOTVAL_CHECK(is_integer(scaled_exp), "twist: exponent not in 1/ram lattice");
    long k = num_long(scaled_exp);
    s.terms_[e] = c * Cyclotomic::root_of_unity(static_cast<unsigned long>(ram_), j * k);
  }
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::stretched(long k) const {
  ROOTVAL_CHECK(k >= 1, "stretched: factor must be >= 1");
  PuiseuxSeries s;
  s.ram_ = ram_;
  if (trunc_) s.trunc_ = *trunc_ * Rat(k);
  for (const auto& [e, c] : terms_) s.terms_[e * Rat(k)] = c;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::inverse(const Rat& prec) const {
  if (terms_.empty()) {
    if (trunc_) fail_precision("inverse: series is zero up to its truncation");
    fail_pre("DegenerateInput", "inverse of the zero series");
  }
  Rat v = terms_.begin()->first;
  Cyclotomic lead = terms_.begin()->second;
  // a = lead eps^v (1 + u), 1/a = lead^{-1} eps^{-v} sum (-u)^k
  std::optional<Rat> rel_prec;  // precision of the unit part
  if (trunc_) rel_prec = *trunc_ - v;
  Rat target_rel = prec + v;  // requested absolute precision, shifted
  if (rel_prec && *rel_prec < target_rel) target_rel = *rel_prec;
  if (target_rel <= 0) fail_precision("inverse: no significant terms at requested precision");

  PuiseuxSeries u;
  u.ram_ = ram_;
  u.trunc_ = target_rel;
  Cyclotomic inv_lead = lead.inverse();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    Rat e = it->first - v;
    if (e >= target_rel) break;
    u.terms_[e] = it->second * inv_lead;
  }
  u.normalize();

  PuiseuxSeries acc = PuiseuxSeries::monomial(Rat(0), Cyclotomic(1), ram_, target_rel);
  PuiseuxSeries upow = PuiseuxSeries::monomial(Rat(0), Cyclotomic(1), ram_, target_rel);
  if (u.has_terms()) {
    Rat uval = u.terms().begin()->first;
    Rat accumulated(0);
    while (accumulated < target_rel) {
      upow = upow * (-u);
      upow = upow.truncated(target_rel);
      if (!upow.has_terms()) break;
      acc = acc + upow;
      accumulated += uval;
    }
  }
  PuiseuxSeries result = acc.scaled(inv_lead).shifted(-v);
  // The geometric tail is controlled by target_rel; record the honest bound.
  result.trunc_ = target_rel - v;
  result.normalize();
  return result;
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.trunc_ != b.trunc_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = a.terms_.begin();
  auto jt = b.terms_.begin();
  for (; it != a.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  }
  return true;
}

std::string PuiseuxSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (e != 0) os << "*" << var << "^" << to_string(e);
  }
  if (first) os << "0";
  if (trunc_) os << " + O(" << var << "^" << to_string(*trunc_) << ")";
  return os.str();
}

Valuation difference_valuation(const PuiseuxSeries& s1, const PuiseuxSeries& s2) {
  return (s1 - s2).valuation();
}

}  // namespace rootval
