#include "rootval/disc_demo.hpp"

#include <algorithm>
#include <set>

#include "rootval/echelon.hpp"
#include "rootval/errors.hpp"

namespace rootval {

namespace {

std::string avar(long k) { return "a" + std::to_string(k); }

// x^n + a2 x^{n-2} + ... + an, the deformed defining polynomial in x.
SparsePoly deformed_poly(long n) {
  SparsePoly p = SparsePoly::variable("x", static_cast<unsigned long>(n));
  for (long k = 2; k <= n; ++k) {
    p += SparsePoly::variable(avar(k)) *
         SparsePoly::variable("x", static_cast<unsigned long>(n - k));
  }
  return p;
}

}  // namespace

MiniversalAn build_miniversal(long n) {
  if (n < 2 || n > 9) {
    fail_pre("CapExceeded", "family is built for 2 <= n <= 9, got n = " +
                                std::to_string(n));
  }
  MiniversalAn m;
  m.n = n;
  SparsePoly p = deformed_poly(n);
  m.F = SparsePoly::variable("y", 2) - p;

  if (n == 2) {
    // the critical locus is the single point x = 0, so the parametrization
    // domain is a point and the only image coordinate vanishes
    m.phi.push_back(SparsePoly(0));
    ROOTVAL_CHECK(p.substituted(avar(2), m.phi[0]).substituted("x", SparsePoly(0))
                      .is_zero(),
                  "base case parametrization must hit the discriminant");
    return m;
  }

  for (long k = 2; k <= n - 2; ++k) m.phi.push_back(SparsePoly::variable(avar(k)));

  // phi_{n-1} = -(n x^{n-1} + (n-2) a2 x^{n-3} + ... + 2 a_{n-2} x)
  SparsePoly phi_n1 =
      SparsePoly(-n) * SparsePoly::variable("x", static_cast<unsigned long>(n - 1));
  for (long k = 2; k <= n - 2; ++k) {
    phi_n1 -= SparsePoly(n - k) * SparsePoly::variable(avar(k)) *
              SparsePoly::variable("x", static_cast<unsigned long>(n - k - 1));
  }
  m.phi.push_back(phi_n1);

  // phi_n = (n-1) x^n + (n-3) a2 x^{n-2} + ... + a_{n-2} x^2
  SparsePoly phi_n =
      SparsePoly(n - 1) * SparsePoly::variable("x", static_cast<unsigned long>(n));
  for (long k = 2; k <= n - 2; ++k) {
    phi_n += SparsePoly(n - k - 1) * SparsePoly::variable(avar(k)) *
             SparsePoly::variable("x", static_cast<unsigned long>(n - k));
  }
  m.phi.push_back(phi_n);

  // the closed form must agree with its defining substitution: phi_n is
  // forced by p = 0 once a_{n-1} is eliminated via dp/dx = 0
  SparsePoly defining =
      -(p.substituted(avar(n), SparsePoly(0)).substituted(avar(n - 1), phi_n1));
  ROOTVAL_CHECK(defining == phi_n, "closed form for the last image coordinate "
                                   "disagrees with the defining substitution");
  SparsePoly on_image = p.substituted(avar(n - 1), phi_n1).substituted(avar(n), phi_n);
  ROOTVAL_CHECK(on_image.is_zero(), "parametrization must land on the family");
  SparsePoly crit = p.derivative("x").substituted(avar(n - 1), phi_n1);
  ROOTVAL_CHECK(crit.is_zero(), "parametrization must land on the critical locus");
  return m;
}

SparsePoly discriminant_polynomial(const MiniversalAn& m) {
  SparsePoly p = -(m.F.substituted("y", SparsePoly(0)));
  if (m.n == 2) return SparsePoly::variable(avar(2));
  return resultant(p, p.derivative("x"), "x").normalized_primitive();
}

NashReport verify_rank_and_nash(const MiniversalAn& m,
                                const std::vector<Rat>& samples) {
  long n = m.n;
  if (n < 3) {
    fail_pre("DegenerateInput",
             "tangent hyperplanes need n >= 3, got n = " + std::to_string(n));
  }
  if (samples.empty()) fail_pre("DegenerateInput", "no samples given");
  for (size_t i = 0; i < samples.size(); ++i) {
    if (samples[i] == 0) fail_pre("DegenerateInput", "sample 0 is not allowed");
    for (size_t j = 0; j < i; ++j) {
      if (samples[i] == samples[j]) {
        fail_pre("NotDistinct", "duplicated sample " + to_string(samples[i]));
      }
    }
  }

  // psi in the chart where a_n is solved away: inputs (x, y, a2..a_{n-1}),
  // outputs (a2, ..., a_{n-1}, F|_{a_n = 0})
  std::vector<std::string> inputs = {"x", "y"};
  for (long k = 2; k <= n - 1; ++k) inputs.push_back(avar(k));
  std::vector<SparsePoly> outputs;
  for (long k = 2; k <= n - 1; ++k) outputs.push_back(SparsePoly::variable(avar(k)));
  outputs.push_back(m.F.substituted(avar(n), SparsePoly(0)));

  std::vector<std::vector<SparsePoly>> jac;
  for (const auto& out : outputs) {
    std::vector<SparsePoly> row;
    for (const auto& v : inputs) row.push_back(out.derivative(v));
    jac.push_back(std::move(row));
  }

  const SparsePoly& phi_n1 = m.phi[static_cast<size_t>(n - 3)];
  // three parameter points at each x; the hyperplane must not see them
  std::vector<std::vector<Rat>> params;
  for (long s = 0; s < 3; ++s) {
    std::vector<Rat> a;
    for (long k = 2; k <= n - 2; ++k) a.push_back(Rat(s * (k - 1)));
    params.push_back(std::move(a));
  }

  NashReport rep;
  rep.n = n;
  rep.rank_ok = true;
  rep.hyperplane_only_x = true;
  rep.injective = true;

  auto record_failure = [&](const Rat& x0) {
    if (!rep.failed_sample) rep.failed_sample = x0;
  };

  for (const Rat& x0 : samples) {
    std::vector<Rat> normal_at_x;
    bool have_normal = false;
    for (const auto& a : params) {
      std::map<std::string, Rat> pt;
      pt["x"] = x0;
      pt["y"] = Rat(0);
      for (long k = 2; k <= n - 2; ++k) pt[avar(k)] = a[static_cast<size_t>(k - 2)];
      pt[avar(n - 1)] = phi_n1.evaluated(pt);

      std::vector<std::vector<Rat>> num;
      for (const auto& row : jac) {
        std::vector<Rat> r;
        for (const auto& e : row) r.push_back(e.evaluated(pt));
        num.push_back(std::move(r));
      }
      if (rank_of(num) != n - 2) {
        rep.rank_ok = false;
        record_failure(x0);
      }

      // off the critical locus the corank disappears
      auto off = pt;
      off[avar(n - 1)] += 1;
      std::vector<std::vector<Rat>> num_off;
      for (const auto& row : jac) {
        std::vector<Rat> r;
        for (const auto& e : row) r.push_back(e.evaluated(off));
        num_off.push_back(std::move(r));
      }
      if (rank_of(num_off) != n - 1) {
        rep.rank_ok = false;
        record_failure(x0);
      }

      // normal of the image hyperplane: kernel of the transposed Jacobian
      std::vector<std::vector<Rat>> tr(inputs.size(),
                                       std::vector<Rat>(num.size(), Rat(0)));
      for (size_t i = 0; i < num.size(); ++i) {
        for (size_t j = 0; j < inputs.size(); ++j) tr[j][i] = num[i][j];
      }
      std::vector<std::vector<Rat>> ker = right_kernel(tr);
      if (ker.size() != 1 || ker[0].back() == 0) {
        rep.hyperplane_only_x = false;
        record_failure(x0);
        continue;
      }
      std::vector<Rat> normal = ker[0];
      Rat scale = normal.back();
      for (auto& c : normal) c /= scale;
      if (!have_normal) {
        normal_at_x = normal;
        have_normal = true;
      } else if (normal != normal_at_x) {
        rep.hyperplane_only_x = false;
        record_failure(x0);
      }
    }
    if (have_normal) {
      for (const auto& prev : rep.normals) {
        if (prev == normal_at_x) {
          rep.injective = false;
          record_failure(x0);
        }
      }
      rep.normals.push_back(std::move(normal_at_x));
    }
  }
  return rep;
}

}  // namespace rootval
