#include "rootval/sparse_poly.hpp"

#include <algorithm>
#include <sstream>

#include "rootval/errors.hpp"

namespace rootval {

namespace {

unsigned long monomial_total_degree(const Monomial& m) {
  unsigned long d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

// Graded lexicographic order (total degree first, then variable-wise,
// earlier variable names weigh more). Compatible with multiplication.
bool deglex_less(const Monomial& a, const Monomial& b) {
  unsigned long da = monomial_total_degree(a), db = monomial_total_degree(b);
  if (da != db) return da < db;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) {
      // The lexicographically smaller variable name is "bigger"; whoever
      // has it wins.
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == a.end() && ib != b.end();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (const auto& [v, e] : b) m[v] += e;
  return m;
}

std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (const auto& [v, e] : b) {
    auto it = m.find(v);
    if (it == m.end() || it->second < e) return std::nullopt;
    if (it->second == e) {
      m.erase(it);
    } else {
      it->second -= e;
    }
  }
  return m;
}

}  // namespace

SparsePoly::SparsePoly(const Rat& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

SparsePoly SparsePoly::variable(const std::string& name, unsigned long exp) {
  SparsePoly p;
  if (exp == 0) return SparsePoly(Rat(1));
  p.terms_[Monomial{{name, exp}}] = Rat(1);
  return p;
}

SparsePoly SparsePoly::term(const Rat& coeff, Monomial m) {
  SparsePoly p;
  if (coeff != 0) p.terms_[std::move(m)] = coeff;
  return p;
}

void SparsePoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat SparsePoly::constant_value() const {
  ROOTVAL_CHECK(is_constant(), "constant_value on non-constant polynomial");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

std::set<std::string> SparsePoly::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) vars.insert(v);
  }
  return vars;
}

long SparsePoly::degree(const std::string& var) const {
  long d = -1;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    long e = it == m.end() ? 0 : static_cast<long>(it->second);
    d = std::max(d, e);
  }
  return terms_.empty() ? -1 : d;
}

long SparsePoly::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) {
    d = std::max(d, static_cast<long>(monomial_total_degree(m)));
  }
  return d;
}

SparsePoly SparsePoly::coefficient_of(const std::string& var, unsigned long k) const {
  SparsePoly p;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    unsigned long e = it == m.end() ? 0 : it->second;
    if (e != k) continue;
    Monomial rest = m;
    rest.erase(var);
    p.terms_[rest] = c;
  }
  return p;
}

SparsePoly SparsePoly::derivative(const std::string& var) const {
  SparsePoly p;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    if (it == m.end()) continue;
    Monomial dm = m;
    unsigned long e = it->second;
    if (e == 1) {
      dm.erase(var);
    } else {
      dm[var] = e - 1;
    }
    p.terms_[dm] += c * Rat(static_cast<long>(e));
  }
  p.prune();
  return p;
}

SparsePoly SparsePoly::substituted(const std::string& var, const SparsePoly& value) const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    unsigned long e = it == m.end() ? 0 : it->second;
    Monomial rest = m;
    rest.erase(var);
    SparsePoly t = SparsePoly::term(c, rest);
    if (e > 0) t *= value.pow(e);
    out += t;
  }
  return out;
}

Rat SparsePoly::evaluated(const std::map<std::string, Rat>& point) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end()) fail_pre("UnknownVariable", "no value for variable " + v);
      t *= pow_rat(it->second, static_cast<long>(e));
    }
    acc += t;
  }
  return acc;
}

PuiseuxSeries SparsePoly::eval_series(const std::map<std::string, PuiseuxSeries>& point) const {
  PuiseuxSeries acc;
  for (const auto& [m, c] : terms_) {
    PuiseuxSeries t = PuiseuxSeries::monomial(Rat(0), Cyclotomic(c));
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end()) fail_pre("UnknownVariable", "no series for variable " + v);
      t = t * it->second.pow(static_cast<long>(e));
    }
    acc = acc + t;
  }
  return acc;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly p = a;
  for (const auto& [m, c] : b.terms_) p.terms_[m] += c;
  p.prune();
  return p;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly p;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      p.terms_[monomial_mul(ma, mb)] += ca * cb;
    }
  }
  p.prune();
  return p;
}

SparsePoly SparsePoly::pow(unsigned long k) const {
  SparsePoly acc(Rat(1));
  SparsePoly base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

std::pair<Monomial, Rat> SparsePoly::leading_term() const {
  ROOTVAL_CHECK(!terms_.empty(), "leading_term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (deglex_less(best->first, it->first)) best = it;
  }
  return {best->first, best->second};
}

SparsePoly SparsePoly::normalized_primitive() const {
  if (is_zero()) return *this;
  Int g(0);
  Int l(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat scale(l, g);
  scale.canonicalize();
  if (leading_term().second < 0) scale = -scale;
  SparsePoly p = *this;
  for (auto& [m, c] : p.terms_) c *= scale;
  return p;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  // deglex descending for stable, readable output
  std::vector<const std::pair<const Monomial, Rat>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return deglex_less(b->first, a->first);
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : order) {
    Rat c = t->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool coeff_written = false;
    if (c != 1 || t->first.empty()) {
      os << to_string(c);
      coeff_written = true;
    }
    for (const auto& [v, e] : t->first) {
      if (coeff_written) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      coeff_written = true;
    }
  }
  return os.str();
}

std::optional<SparsePoly> try_divide(const SparsePoly& a, const SparsePoly& b) {
  if (b.is_zero()) return std::nullopt;
  SparsePoly rem = a;
  SparsePoly quot;
  auto [lb_m, lb_c] = b.leading_term();
  while (!rem.is_zero()) {
    auto [la_m, la_c] = rem.leading_term();
    auto qm = monomial_div(la_m, lb_m);
    if (!qm) return std::nullopt;
    SparsePoly qt = SparsePoly::term(la_c / lb_c, *qm);
    quot += qt;
    rem -= qt * b;
  }
  return quot;
}

SparsePoly determinant(std::vector<std::vector<SparsePoly>> m) {
  size_t n = m.size();
  if (n == 0) return SparsePoly(Rat(1));
  for (const auto& row : m) {
    ROOTVAL_CHECK(row.size() == n, "determinant: matrix not square");
  }
  int sign = 1;
  SparsePoly prev(Rat(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return SparsePoly();  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        SparsePoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = try_divide(num, prev);
        ROOTVAL_CHECK(q.has_value(), "Bareiss: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = SparsePoly();
    }
    prev = m[k][k];
  }
  SparsePoly det = m[n - 1][n - 1];
  return sign == 1 ? det : -det;
}

SparsePoly resultant(const SparsePoly& p, const SparsePoly& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) {
    fail_pre("DegenerateInput", "resultant of a zero polynomial");
  }
  long m = p.degree(var);
  long n = q.degree(var);
  if (m == 0 && n == 0) return SparsePoly(Rat(1));
  if (m == 0) return p.pow(static_cast<unsigned long>(n));
  if (n == 0) return q.pow(static_cast<unsigned long>(m));
  size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<SparsePoly>> syl(size, std::vector<SparsePoly>(size));
  // p-rows first (sign convention).
  for (long i = 0; i < n; ++i) {
    for (long k = 0; k <= m; ++k) {
      syl[i][i + k] = p.coefficient_of(var, static_cast<unsigned long>(m - k));
    }
  }
  for (long i = 0; i < m; ++i) {
    for (long k = 0; k <= n; ++k) {
      syl[n + i][i + k] = q.coefficient_of(var, static_cast<unsigned long>(n - k));
    }
  }
  return determinant(std::move(syl));
}

}  // namespace rootval
