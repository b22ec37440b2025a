#include "rootval/newton_puiseux.hpp"

#include <algorithm>

#include "rootval/errors.hpp"

namespace rootval {

namespace {

// q-th root of an element of the form rational * root of unity; nullopt when
// the rational part is not an exact q-th power or the shape is different.
std::optional<Cyclotomic> cyclo_root(const Cyclotomic& c, long q) {
  auto rk = c.as_rational_times_root();
  if (!rk) return std::nullopt;
  Rat r = rk->first;
  long m = static_cast<long>(std::max<unsigned long>(c.order(), 1));
  long k = rk->second;
  if (r < 0) {  // fold the sign into the root of unity
    r = -r;
    k = 2 * k + m;
    m = 2 * m;
  }
  auto s = rat_root_exact(r, static_cast<unsigned long>(q));
  if (!s) return std::nullopt;
  return Cyclotomic(*s) *
         Cyclotomic::root_of_unity(static_cast<unsigned long>(q * m), k);
}

using EdgeRoots = std::vector<std::pair<Cyclotomic, long>>;  // root, multiplicity

std::string edge_str(const std::vector<Cyclotomic>& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += " + ";
    s += "(" + e[i].str() + ")*T^" + std::to_string(i);
  }
  return s;
}

[[noreturn]] void unsupported(const std::vector<Cyclotomic>& e) {
  fail_pre("UnsupportedCoefficientField",
           "edge polynomial outside the solvable classes: " + edge_str(e));
}

// Exact roots with multiplicity of an edge polynomial (nonzero constant and
// leading coefficients). Solvable classes: degree <= 2, pure binomials, and
// polynomials that split over Q.
EdgeRoots solve_edge(const std::vector<Cyclotomic>& e) {
  long n = static_cast<long>(e.size()) - 1;
  ROOTVAL_CHECK(n >= 1 && !e[0].is_zero() && !e[n].is_zero(),
                "edge polynomial must have nonzero ends");
  if (n == 1) return {{-(e[0] / e[1]), 1}};
  if (n == 2) {
    Cyclotomic disc = e[1] * e[1] - Cyclotomic(4) * e[2] * e[0];
    Cyclotomic half = Cyclotomic(Rat(1, 2)) / e[2];
    if (disc.is_zero()) return {{-e[1] * half, 2}};
    auto s = cyclo_root(disc, 2);
    if (!s) unsupported(e);
    return {{(-e[1] + *s) * half, 1}, {(-e[1] - *s) * half, 1}};
  }
  bool binomial = true;
  for (long k = 1; k < n; ++k) {
    if (!e[k].is_zero()) binomial = false;
  }
  if (binomial) {
    auto t0 = cyclo_root(-(e[0] / e[n]), n);
    if (!t0) unsupported(e);
    EdgeRoots out;
    for (long i = 0; i < n; ++i) {
      out.push_back({*t0 * Cyclotomic::root_of_unity(
                               static_cast<unsigned long>(n), i),
                     1});
    }
    return out;
  }
  bool rational = true;
  for (const auto& c : e) {
    if (!c.is_rational()) rational = false;
  }
  if (!rational) unsupported(e);

  // rational root extraction by divisor search, then retry the smaller cases
  auto clear_denoms = [](std::vector<Rat>& cs) {
    Int l(1);
    for (const auto& q : cs) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), Int(q.get_den()).get_mpz_t());
    }
    for (auto& q : cs) q *= Rat(l);
  };
  std::vector<Rat> coeffs;
  for (const auto& c : e) coeffs.push_back(c.rational_value());
  clear_denoms(coeffs);
  auto divisors = [](Int z) {
    std::vector<Int> out;
    z = abs(z);
    for (Int i(1); i * i <= z; ++i) {
      if (z % i == 0) {
        out.push_back(i);
        out.push_back(z / i);
      }
    }
    return out;
  };
  EdgeRoots found;
  bool progress = true;
  while (progress && static_cast<long>(coeffs.size()) - 1 > 0) {
    progress = false;
    clear_denoms(coeffs);
    for (const Int& p : divisors(Int(coeffs.front().get_num()))) {
      for (const Int& q : divisors(Int(coeffs.back().get_num()))) {
        for (int sign : {1, -1}) {
          Rat cand = rat(sign * p, q);
          // synthetic evaluation and division
          Rat acc(0);
          std::vector<Rat> quot;
          for (size_t i = coeffs.size(); i-- > 0;) {
            acc = acc * cand + coeffs[i];
            if (i > 0) quot.push_back(acc);
          }
          if (acc != 0) continue;
          std::reverse(quot.begin(), quot.end());
          coeffs = std::move(quot);
          bool merged = false;
          for (auto& [r, mult] : found) {
            if (r == Cyclotomic(cand)) {
              ++mult;
              merged = true;
            }
          }
          if (!merged) found.push_back({Cyclotomic(cand), 1});
          progress = true;
          break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
    if (!progress || coeffs.front() == 0) break;
  }
  long rest = static_cast<long>(coeffs.size()) - 1;
  if (rest == 0) return found;
  ROOTVAL_CHECK(coeffs.front() != 0, "edge factor lost its constant term");
  if (rest > 2) {
    bool bin = true;
    for (long k = 1; k < rest; ++k) {
      if (coeffs[k] != 0) bin = false;
    }
    if (!bin) unsupported(e);
  }
  std::vector<Cyclotomic> tail;
  for (const auto& q : coeffs) tail.push_back(Cyclotomic(q));
  for (auto& rm : solve_edge(tail)) found.push_back(std::move(rm));
  return found;
}

PuiseuxSeries unit_series() {
  return PuiseuxSeries::monomial(Rat(0), Cyclotomic(1));
}

// All roots of p (coefficients by power of the root variable) as series in
// eps, to absolute precision target. positive_only keeps only roots of
// strictly positive valuation (the recursion case).
void expand_roots(const std::vector<PuiseuxSeries>& p_in, const Rat& target,
                  bool positive_only, std::vector<PuiseuxSeries>& out,
                  int depth) {
  ROOTVAL_CHECK(depth < 64, "expansion recursion did not terminate");
  std::vector<PuiseuxSeries> p = p_in;
  while (!p.empty() && p.back().known_zero()) p.pop_back();
  long n = static_cast<long>(p.size()) - 1;
  if (n <= 0) return;
  {
    Valuation lead = p[n].valuation();
    if (lead.kind == Valuation::Indeterminate) {
      fail_precision("leading coefficient is unknown at this truncation");
    }
  }

  // zero roots come from a certified-zero constant term; squarefree means at
  // most one
  if (p[0].known_zero()) {
    p.erase(p.begin());
    --n;
    if (n >= 1 && p[0].known_zero()) {
      fail_pre("NotRegularSemisimple", "a double zero eigenvalue is certified");
    }
    out.push_back(PuiseuxSeries());  // the exact zero root
    if (n == 0) return;
  }
  // a constant coefficient with no known terms below a finite truncation
  // enters the polygon as a pessimistic point at its truncation order; roots
  // hanging off it are certified zero mod eps^target iff the implied slope
  // clears the target
  bool pess = !p[0].has_terms();

  if (n == 1) {
    if (pess) {
      if (*p[0].trunc() - p[1].valuation().value < target) {
        fail_precision("constant coefficient is unknown at this truncation");
      }
      out.push_back(PuiseuxSeries::zero(1, target));
      return;
    }
    Rat v0 = p[0].valuation().value;
    Rat prec = target - std::min(v0, Rat(0));
    PuiseuxSeries root = (-p[0]) * p[1].inverse(prec);
    Valuation rv = root.valuation();
    if (!positive_only ||
        (rv.kind == Valuation::Finite && rv.value > 0) ||
        rv.kind == Valuation::Indeterminate) {
      out.push_back(root.truncated(target));
    }
    return;
  }

  // Newton polygon: lower hull of (k, val p_k) over known coefficients
  struct Pt {
    long k;
    Rat v;
  };
  std::vector<Pt> pts;
  std::vector<Pt> unknown;  // (k, truncation bound)
  if (pess) pts.push_back({0, *p[0].trunc()});
  for (long k = pess ? 1 : 0; k <= n; ++k) {
    Valuation v = p[k].valuation();
    if (v.kind == Valuation::Finite) {
      pts.push_back({k, v.value});
    } else if (v.kind == Valuation::Indeterminate) {
      unknown.push_back({k, *p[k].trunc()});
    }
  }
  std::vector<Pt> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull[hull.size() - 1];
      // keep b only if it lies strictly below segment a-pt
      if ((b.v - a.v) * Rat(pt.k - a.k) < (pt.v - a.v) * Rat(b.k - a.k)) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  for (const auto& u : unknown) {
    // a coefficient known only above the hull cannot move it
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
      const Pt& a = hull[i];
      const Pt& b = hull[i + 1];
      if (u.k < a.k || u.k > b.k) continue;
      Rat line = a.v + (b.v - a.v) * Rat(u.k - a.k) / Rat(b.k - a.k);
      if (u.v <= line) {
        fail_precision("coefficient of degree " + std::to_string(u.k) +
                       " is truncated at the Newton polygon");
      }
    }
  }

  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    const Pt& a = hull[i];
    const Pt& b = hull[i + 1];
    long width = b.k - a.k;
    Rat mu = (a.v - b.v) / Rat(width);
    if (pess && a.k == 0 && mu < target) {
      // the pessimistic point only bounds the slope from below
      fail_precision("constant coefficient is unknown at this truncation");
    }
    if (positive_only && mu <= 0) continue;
    if (mu >= target) {
      // unresolved below the requested precision: zero modulo eps^target
      for (long c = 0; c < width; ++c) {
        out.push_back(PuiseuxSeries::zero(1, target));
      }
      continue;
    }
    std::vector<Cyclotomic> edge(width + 1);
    for (long k = a.k; k <= b.k; ++k) {
      Rat line = a.v - mu * Rat(k - a.k);
      edge[k - a.k] = p[k].coefficient(line);
    }
    long solved = 0;
    for (const auto& [gamma, mult] : solve_edge(edge)) {
      solved += mult;
      // substitute y = eps^mu (gamma + z)
      std::vector<PuiseuxSeries> shifted(n + 1);
      for (long k = 0; k <= n; ++k) shifted[k] = p[k].shifted(Rat(k) * mu);
      std::vector<PuiseuxSeries> q(n + 1);
      std::vector<Cyclotomic> gpow = {Cyclotomic(1)};
      for (long k = 1; k <= n; ++k) gpow.push_back(gpow.back() * gamma);
      std::vector<std::vector<Rat>> binom(n + 1, std::vector<Rat>(n + 1, Rat(0)));
      for (long k = 0; k <= n; ++k) {
        binom[k][0] = Rat(1);
        for (long j = 1; j <= k; ++j) {
          binom[k][j] = binom[k - 1][j - 1] + (j <= k - 1 ? binom[k - 1][j] : Rat(0));
        }
      }
      for (long j = 0; j <= n; ++j) {
        PuiseuxSeries acc;
        for (long k = j; k <= n; ++k) {
          acc = acc + shifted[k].scaled(Cyclotomic(binom[k][j]) * gpow[k - j]);
        }
        q[j] = acc;
      }
      std::vector<PuiseuxSeries> tails;
      expand_roots(q, target - mu, true, tails, depth + 1);
      ROOTVAL_CHECK(static_cast<long>(tails.size()) == mult,
                    "continuation count does not match edge multiplicity");
      PuiseuxSeries head = PuiseuxSeries::monomial(mu, gamma);
      for (const auto& z : tails) out.push_back(head + z.shifted(mu));
    }
    ROOTVAL_CHECK(solved == width, "edge roots do not fill the edge");
  }
}

long denominator_lcm(const PuiseuxSeries& s) {
  long q = 1;
  for (const auto& [e, c] : s.terms()) q = ilcm(q, den_long(e));
  return q;
}

std::vector<Branch> group_into_branches(std::vector<PuiseuxSeries> roots) {
  std::vector<Branch> out;
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    long q = denominator_lcm(roots[i]);
    PuiseuxSeries rep =
        PuiseuxSeries::from_terms(roots[i].terms(), q, roots[i].trunc());
    used[i] = true;
    for (long j = 1; j < q; ++j) {
      PuiseuxSeries tw = rep.twisted(j);
      bool matched = false;
      for (size_t k = 0; k < roots.size(); ++k) {
        if (used[k]) continue;
        Valuation dv = difference_valuation(tw, roots[k]);
        if (dv.kind != Valuation::Finite) {
          used[k] = true;
          matched = true;
          break;
        }
      }
      if (!matched) {
        fail_precision("a Galois conjugate expansion is missing; the orbit "
                       "cannot be certified at this precision");
      }
    }
    Branch b;
    b.d = q;
    b.y = rep.stretched(q);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Branch& a, const Branch& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.str() < b.str();
  });
  return out;
}

}  // namespace

std::vector<PuiseuxSeries> puiseux_expansions(const std::vector<PuiseuxSeries>& p,
                                              const Rat& N) {
  if (p.size() < 2) fail_pre("DegenerateInput", "polynomial must have degree >= 1");
  if (!(p.back() == unit_series())) {
    fail_pre("DegenerateInput", "polynomial must be monic");
  }
  if (N <= 0) fail_pre("DegenerateInput", "target precision must be positive");
  std::vector<PuiseuxSeries> roots;
  expand_roots(p, N, false, roots, 0);
  ROOTVAL_CHECK(roots.size() == p.size() - 1,
                "expansion count does not match the degree");
  return roots;
}

std::vector<Branch> newton_puiseux(const std::vector<PuiseuxSeries>& p,
                                   const Rat& N) {
  return group_into_branches(puiseux_expansions(p, N));
}

std::vector<Branch> eigen_expansions(const MatrixSeries& g, long N) {
  std::vector<PuiseuxSeries> roots =
      puiseux_expansions(g.characteristic_polynomial(), Rat(N));
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t j = i + 1; j < roots.size(); ++j) {
      Valuation dv = difference_valuation(roots[i], roots[j]);
      if (dv.kind == Valuation::Infinite) {
        fail_pre("NotRegularSemisimple",
                 "two eigenvalue expansions are certified equal");
      }
      if (dv.kind == Valuation::Indeterminate) {
        fail_precision("two eigenvalue expansions agree to the working "
                       "precision; raise it to separate them");
      }
    }
  }
  return group_into_branches(std::move(roots));
}

std::vector<Branch> germ_branches(const SparsePoly& f, long N) {
  if (f.is_zero()) fail_pre("DegenerateInput", "the zero germ has no branches");
  for (const auto& v : f.variables()) {
    if (v != "x" && v != "y") {
      fail_pre("UnknownVariable", "germ must be a polynomial in x, y; found " + v);
    }
  }
  if (f.evaluated({{"x", Rat(0)}, {"y", Rat(0)}}) != 0) {
    fail_pre("DegenerateInput", "germ does not vanish at the origin");
  }
  if (N < 1) fail_pre("DegenerateInput", "target precision must be positive");

  // peel off the x-content; a square factor of x means the germ is not reduced
  long xc = 0;
  SparsePoly g = f;
  while (true) {
    auto q = try_divide(g, SparsePoly::variable("x"));
    if (!q) break;
    g = *q;
    ++xc;
  }
  if (xc > 1) fail_pre("DegenerateInput", "germ has a repeated factor x");
  std::vector<Branch> out;
  if (xc == 1) out.push_back(Branch::axis());

  long dy = g.degree("y");
  if (dy < 1) {
    if (out.empty()) fail_pre("DegenerateInput", "germ has no branch at the origin");
    ROOTVAL_CHECK(g.is_constant(), "residual factor must be a unit here");
    return out;
  }
  SparsePoly lc = g.coefficient_of("y", static_cast<unsigned long>(dy));
  if (!lc.is_constant()) {
    fail_pre("DegenerateInput",
             "leading y-coefficient must be a nonzero constant");
  }
  Rat scale = lc.constant_value();
  std::vector<PuiseuxSeries> coeffs;
  for (long j = 0; j <= dy; ++j) {
    SparsePoly c = g.coefficient_of("y", static_cast<unsigned long>(j));
    std::map<Rat, Cyclotomic> terms;
    for (const auto& [mono, r] : c.terms()) {
      long e = mono.empty() ? 0 : static_cast<long>(mono.begin()->second);
      terms[Rat(e)] = Cyclotomic(r / scale);
    }
    coeffs.push_back(PuiseuxSeries::from_terms(std::move(terms)));
  }
  for (const auto& b : newton_puiseux(coeffs, Rat(N))) out.push_back(b);
  return out;
}

}  // namespace rootval
