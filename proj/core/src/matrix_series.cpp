#include "rootval/matrix_series.hpp"

#include "rootval/errors.hpp"

namespace rootval {

namespace {

void require_rational_laurent(const PuiseuxSeries& s, const char* what) {
  for (const auto& [e, c] : s.terms()) {
    if (!is_integer(e)) {
      fail_pre("DegenerateInput",
               std::string(what) + " must have integer eps-exponents");
    }
    if (!c.is_rational()) {
      fail_pre("DegenerateInput",
               std::string(what) + " must have rational coefficients");
    }
  }
}

}  // namespace

MatrixSeries::MatrixSeries(std::vector<std::vector<PuiseuxSeries>> entries,
                           std::optional<long> trunc)
    : d_(static_cast<long>(entries.size())),
      entries_(std::move(entries)),
      trunc_(trunc) {
  if (d_ < 1) fail_pre("DegenerateInput", "matrix must have size >= 1");
  for (auto& row : entries_) {
    if (static_cast<long>(row.size()) != d_) {
      fail_pre("SizeMismatch", "matrix rows must all have length d");
    }
    for (auto& e : row) {
      require_rational_laurent(e, "matrix entry");
      if (trunc_) e = e.truncated(Rat(*trunc_));
    }
  }
}

std::vector<PuiseuxSeries> MatrixSeries::characteristic_polynomial() const {
  long n = d_;
  auto mat_mul = [&](const std::vector<std::vector<PuiseuxSeries>>& a,
                     const std::vector<std::vector<PuiseuxSeries>>& b) {
    std::vector<std::vector<PuiseuxSeries>> c(n, std::vector<PuiseuxSeries>(n));
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        PuiseuxSeries acc;
        for (long k = 0; k < n; ++k) acc = acc + a[i][k] * b[k][j];
        c[i][j] = acc;
      }
    }
    return c;
  };
  auto trace = [&](const std::vector<std::vector<PuiseuxSeries>>& a) {
    PuiseuxSeries t;
    for (long i = 0; i < n; ++i) t = t + a[i][i];
    return t;
  };

  // Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A (M_k + c_k I).
  std::vector<PuiseuxSeries> coeffs(n + 1);
  coeffs[n] = PuiseuxSeries::monomial(Rat(0), Cyclotomic(1));
  std::vector<std::vector<PuiseuxSeries>> M = entries_;
  for (long k = 1; k <= n; ++k) {
    PuiseuxSeries ck = (-trace(M)).scaled(Cyclotomic(rat(1, k)));
    coeffs[n - k] = ck;
    if (k == n) break;
    std::vector<std::vector<PuiseuxSeries>> Mc = M;
    for (long i = 0; i < n; ++i) Mc[i][i] = Mc[i][i] + ck;
    M = mat_mul(entries_, Mc);
  }
  return coeffs;
}

MatrixSeries companion_of(const std::vector<PuiseuxSeries>& monic) {
  long n = static_cast<long>(monic.size()) - 1;
  if (n < 1) fail_pre("DegenerateInput", "companion needs degree >= 1");
  if (!(monic[n] == PuiseuxSeries::monomial(Rat(0), Cyclotomic(1)))) {
    fail_pre("DegenerateInput", "companion needs a monic polynomial");
  }
  std::optional<long> trunc;
  for (const auto& c : monic) {
    require_rational_laurent(c, "polynomial coefficient");
    if (c.trunc()) {
      long t = num_long(*c.trunc());
      trunc = trunc ? std::min(*trunc, t) : t;
    }
  }
  std::vector<std::vector<PuiseuxSeries>> m(n, std::vector<PuiseuxSeries>(n));
  for (long i = 1; i < n; ++i) {
    m[i][i - 1] = PuiseuxSeries::monomial(Rat(0), Cyclotomic(1));
  }
  for (long i = 0; i < n; ++i) m[i][n - 1] = -monic[i];
  return MatrixSeries(std::move(m), trunc);
}

MatrixSeries companion_from_branches(const std::vector<Branch>& branches) {
  if (branches.empty()) fail_pre("DegenerateInput", "no branches given");
  long d = 0;
  std::optional<long> trunc;
  for (const auto& b : branches) {
    if (b.vertical) {
      fail_pre("DegenerateInput", "vertical branch has no eigenvalue role");
    }
    d += b.d;
  }
  std::vector<std::vector<PuiseuxSeries>> m(d, std::vector<PuiseuxSeries>(d));
  long off = 0;
  for (const auto& b : branches) {
    // minimal polynomial: product of (lambda - u_j) over the conjugates
    std::vector<PuiseuxSeries> poly = {PuiseuxSeries::monomial(Rat(0), Cyclotomic(1))};
    for (const auto& u : eigen_embeddings(b)) {
      std::vector<PuiseuxSeries> next(poly.size() + 1);
      for (size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] = next[k + 1] + poly[k];
        next[k] = next[k] - poly[k] * u;
      }
      poly = std::move(next);
    }
    for (size_t k = 0; k + 1 < poly.size(); ++k) {
      for (const auto& [e, c] : poly[k].terms()) {
        if (!c.is_rational()) {
          fail_pre("DegenerateInput",
                   "branch minimal polynomial is not rational at eps^" +
                       to_string(e));
        }
      }
      if (poly[k].trunc()) {
        // conjugate products live in exponents k/d; floor to the known
        // integer-exponent window
        Rat t = *poly[k].trunc();
        long tl = to_long(Int(t.get_num() / t.get_den()));
        trunc = trunc ? std::min(*trunc, tl) : tl;
      }
    }
    for (long i = 1; i < b.d; ++i) {
      m[off + i][off + i - 1] = PuiseuxSeries::monomial(Rat(0), Cyclotomic(1));
    }
    for (long i = 0; i < b.d; ++i) m[off + i][off + b.d - 1] = -poly[i];
    off += b.d;
  }
  return MatrixSeries(std::move(m), trunc);
}

}  // namespace rootval
