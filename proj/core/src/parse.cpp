#include "rootval/parse.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "rootval/errors.hpp"

namespace rootval {

namespace {

struct Parser {
  const std::string& s;
  std::set<std::string> vars;
  std::string neg_exp_code = "SyntaxError";
  size_t pos = 0;

  [[noreturn]] void syntax(const std::string& what) const {
    fail_parse("SyntaxError", what, static_cast<long>(pos));
  }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) syntax(std::string("expected '") + c + "'");
  }

  unsigned long parse_uint() {
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
      syntax("expected a digit");
    }
    unsigned long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > 100000000UL) syntax("integer literal is too large");
      v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
      ++pos;
    }
    return v;
  }

  long parse_int() {
    bool neg = eat('-');
    unsigned long v = parse_uint();
    return neg ? -static_cast<long>(v) : static_cast<long>(v);
  }

  Rat parse_number() {
    Int num(parse_uint());
    if (eat('/')) {
      size_t at = pos;
      Int den(parse_uint());
      if (den == 0) {
        fail_parse("SyntaxError", "zero denominator", static_cast<long>(at));
      }
      return Rat(num) / Rat(den);
    }
    return Rat(num);
  }

  std::string parse_ident() {
    skip();
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) {
      syntax("expected an identifier");
    }
    size_t start = pos;
    while (pos < s.size() &&
           std::isalnum(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    return s.substr(start, pos - start);
  }

  SparsePoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      SparsePoly e = expr();
      expect(')');
      return e;
    }
    if (c == '-') {
      ++pos;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return SparsePoly(parse_number());
    }
    size_t at = pos;
    std::string name = parse_ident();
    if (!vars.count(name)) {
      fail_parse("UnknownVariable", "unknown variable " + name,
                 static_cast<long>(at));
    }
    return SparsePoly::variable(name);
  }

  SparsePoly factor() {
    SparsePoly base = primary();
    if (eat('^')) {
      if (peek() == '-') {
        fail_parse(neg_exp_code, "negative exponent", static_cast<long>(pos));
      }
      return base.pow(parse_uint());
    }
    return base;
  }

  SparsePoly term() {
    SparsePoly p = factor();
    while (eat('*')) p *= factor();
    return p;
  }

  SparsePoly expr() {
    SparsePoly p = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        p += term();
      } else if (c == '-') {
        ++pos;
        p -= term();
      } else {
        return p;
      }
    }
  }
};

// exponent map of a polynomial in the single variable `var`
PuiseuxSeries univariate_series(const SparsePoly& p, const std::string& var,
                                std::optional<Rat> trunc = std::nullopt) {
  std::map<Rat, Cyclotomic> terms;
  for (const auto& [mono, c] : p.terms()) {
    long e = 0;
    for (const auto& [name, k] : mono) {
      ROOTVAL_CHECK(name == var, "unexpected variable in a univariate entry");
      e = static_cast<long>(k);
    }
    terms[Rat(e)] = Cyclotomic(c);
  }
  return PuiseuxSeries::from_terms(std::move(terms), 1, std::move(trunc));
}

}  // namespace

SparsePoly parse_polynomial(const std::string& src) {
  Parser p{src, {"x", "y", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9"}};
  SparsePoly out = p.expr();
  if (!p.at_end()) p.syntax("unexpected trailing input");
  return out;
}

Branch parse_branch(const std::string& src) {
  Parser p{src, {"t"}};
  if (p.parse_ident() != "x") p.syntax("branch input must start with 'x ='");
  p.expect('=');
  bool vertical = false;
  long d = 1;
  if (p.peek() == '0') {
    ++p.pos;
    vertical = true;
  } else {
    size_t at = p.pos;
    if (p.parse_ident() != "t") p.syntax("expected t^<int>");
    d = 1;
    if (p.eat('^')) d = p.parse_int();
    if (d < 1) {
      fail_parse("NonPositiveRamification",
                 "ramification index must be >= 1, got " + std::to_string(d),
                 static_cast<long>(at));
    }
  }
  p.expect(';');
  if (p.parse_ident() != "y") p.syntax("expected 'y ='");
  p.expect('=');
  SparsePoly ypoly = p.expr();
  std::optional<long> trunc;
  if (p.eat(';')) {
    if (p.parse_ident() != "trunc") p.syntax("expected 'trunc='");
    p.expect('=');
    size_t at = p.pos;
    long t = p.parse_int();
    if (t < 1) {
      fail_parse("DegenerateInput", "trunc must be >= 1", static_cast<long>(at));
    }
    trunc = t;
  }
  if (!p.at_end()) p.syntax("unexpected trailing input");

  if (vertical) {
    if (!(ypoly == SparsePoly::variable("t")) || trunc) {
      fail_pre("DegenerateInput", "the vertical branch must be x = 0; y = t");
    }
    return Branch::axis();
  }
  long highest = d;
  for (const auto& [mono, c] : ypoly.terms()) {
    long e = mono.empty() ? 0 : static_cast<long>(mono.begin()->second);
    if (e < 1) {
      fail_pre("DegenerateInput", "branch must pass through the origin "
                                  "(y has a constant term)");
    }
    highest = std::max(highest, e);
  }
  Branch b;
  b.d = d;
  b.y = univariate_series(ypoly, "t", Rat(trunc ? *trunc : highest + 1));
  return b;
}

MatrixSeries parse_matrix(const std::string& src) {
  Parser p{src, {"e"}, "NegativeExponent"};
  if (p.parse_ident() != "d") p.syntax("expected 'd='");
  p.expect('=');
  long d = p.parse_int();
  if (d < 1) fail_pre("DegenerateInput", "matrix size must be >= 1");
  p.expect(';');
  if (p.parse_ident() != "trunc") p.syntax("expected 'trunc='");
  p.expect('=');
  long trunc = p.parse_int();
  if (trunc < 1) fail_pre("DegenerateInput", "trunc must be >= 1");
  p.expect(';');

  std::vector<SparsePoly> entries;
  while (!p.at_end()) {
    entries.push_back(p.expr());
    if (!p.eat(';')) break;
  }
  if (!p.at_end()) p.syntax("unexpected trailing input");
  if (static_cast<long>(entries.size()) != d * d) {
    fail_pre("WrongEntryCount",
             "expected " + std::to_string(d * d) + " entries, got " +
                 std::to_string(entries.size()));
  }
  std::vector<std::vector<PuiseuxSeries>> rows(d);
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      rows[i].push_back(univariate_series(entries[static_cast<size_t>(i * d + j)],
                                          "e", Rat(trunc)));
    }
  }
  return MatrixSeries(std::move(rows), trunc);
}

namespace {

std::string series_text(const PuiseuxSeries& s, const std::string& var) {
  if (s.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rat r = [&] {
      ROOTVAL_CHECK(c.is_rational(), "canonical text needs rational coefficients");
      return c.rational_value();
    }();
    Rat mag = r < 0 ? -r : r;
    if (first) {
      if (r < 0) os << "-";
      first = false;
    } else {
      os << (r < 0 ? " - " : " + ");
    }
    long k = num_long(e);
    ROOTVAL_CHECK(is_integer(e), "canonical text needs integer exponents");
    if (k == 0) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << "*";
      os << var << "^" << k;
    }
  }
  return os.str();
}

}  // namespace

std::string branch_text(const Branch& b) {
  if (b.vertical) return "x = 0; y = t";
  std::ostringstream os;
  os << "x = t^" << b.d << "; y = " << series_text(b.y, "t");
  ROOTVAL_CHECK(b.y.trunc().has_value() && is_integer(*b.y.trunc()),
                "a parsed branch carries an integer truncation");
  os << "; trunc=" << num_long(*b.y.trunc());
  return os.str();
}

std::string matrix_text(const MatrixSeries& m) {
  std::ostringstream os;
  ROOTVAL_CHECK(m.trunc().has_value(), "a parsed matrix carries a truncation");
  os << "d=" << m.d() << "; trunc=" << *m.trunc() << ";";
  for (long i = 0; i < m.d(); ++i) {
    for (long j = 0; j < m.d(); ++j) {
      os << " " << series_text(m.at(i, j), "e") << ";";
    }
  }
  return os.str();
}

}  // namespace rootval
