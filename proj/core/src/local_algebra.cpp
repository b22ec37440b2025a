#include "rootval/local_algebra.hpp"

#include <algorithm>

#include "rootval/echelon.hpp"
#include "rootval/errors.hpp"

namespace rootval {

namespace {

void require_plane_germ(const SparsePoly& f) {
  if (f.is_zero()) fail_pre("DegenerateInput", "the zero polynomial is not a germ");
  for (const auto& v : f.variables()) {
    if (v != "x" && v != "y") {
      fail_pre("UnknownVariable", "germ may only use x and y, found " + v);
    }
  }
  if (f.evaluated({{"x", Rat(0)}, {"y", Rat(0)}}) != 0) {
    fail_pre("DegenerateInput", "germ does not vanish at the origin");
  }
}

long xy_degree(const Monomial& m) {
  long d = 0;
  for (const auto& [v, e] : m) d += static_cast<long>(e);
  return d;
}

// Index of x^a y^b within the monomials of degree < D, graded, x-power first.
long monomial_index(long a, long b) {
  long d = a + b;
  return d * (d + 1) / 2 + b;
}

std::map<long, Rat> poly_below(const SparsePoly& p, long D) {
  std::map<long, Rat> v;
  for (const auto& [m, c] : p.terms()) {
    if (xy_degree(m) >= D) continue;
    long a = 0, b = 0;
    for (const auto& [var, e] : m) (var == "x" ? a : b) = static_cast<long>(e);
    v[monomial_index(a, b)] = c;
  }
  return v;
}

// dim Q[x,y]/(I + m^D) and whether every monomial of degree D-1 lies in
// I + m^D, where I is generated by gens.
std::pair<long, bool> quotient_dim_below(const std::vector<SparsePoly>& gens,
                                         long D) {
  std::vector<std::map<long, Rat>> vecs;
  SparsePoly x = SparsePoly::variable("x");
  SparsePoly y = SparsePoly::variable("y");
  for (const auto& g : gens) {
    // multiples x^a y^b g with a + b < D; higher shifts land in m^D
    std::vector<SparsePoly> xpow = {g};
    for (long a = 0; a < D; ++a) {
      if (a > 0) xpow.push_back(xpow.back() * x);
      SparsePoly cur = xpow.back();
      for (long b = 0; a + b < D; ++b) {
        if (b > 0) cur *= y;
        auto v = poly_below(cur, D);
        if (!v.empty()) vecs.push_back(std::move(v));
      }
    }
  }
  long total = D * (D + 1) / 2;
  long bound = monomial_index(0, D);
  long rank = static_cast<long>(echelon_pivot_orders(vecs, bound).size());
  long dim = total - rank;

  for (long a = 0; a < D; ++a) {
    Monomial m;
    if (a > 0) m["x"] = static_cast<unsigned long>(a);
    if (D - 1 - a > 0) m["y"] = static_cast<unsigned long>(D - 1 - a);
    vecs.push_back(poly_below(SparsePoly::term(Rat(1), m), D));
  }
  long rank2 = static_cast<long>(echelon_pivot_orders(vecs, bound).size());
  return {dim, rank2 == rank};
}

LocalQuotientCertificate certified_quotient(const std::vector<SparsePoly>& gens,
                                            LocalQuotientCertificate::Method method,
                                            const std::string& what) {
  const long ceiling = 48;
  std::pair<long, bool> prev = quotient_dim_below(gens, 2);
  for (long D = 3; D <= ceiling; ++D) {
    std::pair<long, bool> cur = quotient_dim_below(gens, D);
    if (prev.first == cur.first && prev.second) {
      return {prev.first, D - 1, method};
    }
    prev = cur;
  }
  fail_pre("NotIsolated",
           what + ": quotient dimension still growing at degree " +
               std::to_string(ceiling) + "; the singularity is not isolated");
}

}  // namespace

LocalQuotientCertificate milnor_number(const SparsePoly& f) {
  require_plane_germ(f);
  return certified_quotient({f.derivative("x"), f.derivative("y")},
                            LocalQuotientCertificate::Method::JacobianQuotient,
                            "milnor_number");
}

LocalQuotientCertificate tjurina_number(const SparsePoly& f) {
  require_plane_germ(f);
  LocalQuotientCertificate tau =
      certified_quotient({f, f.derivative("x"), f.derivative("y")},
                         LocalQuotientCertificate::Method::TjurinaQuotient,
                         "tjurina_number");
  LocalQuotientCertificate mu = milnor_number(f);
  ROOTVAL_CHECK(tau.value <= mu.value, "tau exceeds mu");
  return tau;
}

LocalQuotientCertificate delta_from_poly(const SparsePoly& f,
                                         const std::vector<Branch>& branches) {
  require_plane_germ(f);
  if (branches.empty()) {
    fail_pre("IncompleteFactorization", "no branches supplied");
  }

  // Completeness by degree count: vertical branches account for the x-content
  // of f, the rest for its y-degree.
  long x_content = 0;
  {
    SparsePoly g = f;
    while (g.coefficient_of("x", 0).is_zero()) {
      auto q = try_divide(g, SparsePoly::variable("x"));
      ROOTVAL_CHECK(q.has_value(), "x-content division failed");
      g = *q;
      ++x_content;
    }
    long vert = 0, dsum = 0;
    for (const auto& b : branches) {
      if (b.vertical) {
        ++vert;
      } else {
        dsum += b.d;
      }
    }
    if (x_content > 1) {
      fail_pre("DegenerateInput", "germ is not reduced: divisible by x^2");
    }
    if (vert != x_content || dsum != g.degree("y")) {
      fail_pre("IncompleteFactorization",
               "branch ramifications do not account for the full germ");
    }
  }

  long r = static_cast<long>(branches.size());
  long max_d = 1;
  for (const auto& b : branches) max_d = std::max(max_d, b.d);

  // Codimension of the span of monomial images inside (+)_i Q(zeta)[t]/t^N.
  auto codim_at = [&](long N) -> long {
    std::vector<std::map<long, Cyclotomic>> vecs;
    // per-branch powers of the y-series, built incrementally
    std::vector<std::vector<PuiseuxSeries>> ypow(branches.size());
    for (size_t i = 0; i < branches.size(); ++i) {
      ypow[i].push_back(PuiseuxSeries::monomial(Rat(0), Cyclotomic(1)));
    }
    for (long a = 0; a < N; ++a) {
      for (long b = 0; a + b < N; ++b) {
        std::map<long, Cyclotomic> v;
        for (size_t i = 0; i < branches.size(); ++i) {
          const Branch& br = branches[i];
          long base = static_cast<long>(i) * N;
          if (br.vertical) {
            // x = 0, y = t
            if (a == 0 && b < N) v[base + b] = Cyclotomic(1);
            continue;
          }
          while (static_cast<long>(ypow[i].size()) <= b) {
            ypow[i].push_back(ypow[i].back() * br.y);
          }
          PuiseuxSeries img = ypow[i][b];
          if (img.trunc() && *img.trunc() + Rat(a * br.d) < Rat(N)) {
            fail_precision("delta_from_poly: branch " + std::to_string(i + 1) +
                           " is truncated below t^" + std::to_string(N));
          }
          for (const auto& [e, c] : img.terms()) {
            long o = num_long(e) + a * br.d;
            if (o < N) v[base + o] = c;
          }
        }
        vecs.push_back(std::move(v));
      }
    }
    long rank = static_cast<long>(echelon_pivot_orders(vecs, r * N).size());
    return r * N - rank;
  };

  const long ceiling = 96;
  long N = 2 * max_d + 2;
  while (N + max_d <= ceiling) {
    long d1 = codim_at(N);
    long d2 = codim_at(N + max_d);
    if (d1 == d2) return {d1, N, LocalQuotientCertificate::Method::NormalizationCodim};
    N += max_d;
  }
  fail_precision("delta_from_poly: codimension did not stabilize below t^" +
                 std::to_string(ceiling));
}

}  // namespace rootval
