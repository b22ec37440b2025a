#include "doctest.h"
#include "rootval/puiseux.hpp"

using namespace rootval;

namespace {

PuiseuxSeries mono(long num, long den, long coeff) {
  return PuiseuxSeries::monomial(rat(num, den), Cyclotomic(coeff));
}

}  // namespace

TEST_CASE("valuation of a stored series is its least exponent") {
  // eps^3 - 2 eps^{7/2}, exact
  PuiseuxSeries s = mono(3, 1, 1) + mono(7, 2, -2);
  CHECK(s.ram() == 2);
  CHECK(s.valuation() == Valuation::finite(Rat(3)));
}

TEST_CASE("the exact zero series has infinite valuation") {
  CHECK(PuiseuxSeries().valuation() == Valuation::infinite());
}

TEST_CASE("a truncated empty series has indeterminate valuation") {
  PuiseuxSeries s = PuiseuxSeries::zero(1, Rat(5));
  CHECK(s.valuation() == Valuation::indeterminate());
}

TEST_CASE("difference valuations") {
  // eps^{3/2} vs -eps^{3/2}
  CHECK(difference_valuation(mono(3, 2, 1), mono(3, 2, -1)) ==
        Valuation::finite(rat(3, 2)));
  // identical up to truncation 10
  PuiseuxSeries e10 = PuiseuxSeries::monomial(Rat(1), Cyclotomic(1), 1, Rat(10));
  CHECK(difference_valuation(e10, e10) == Valuation::indeterminate());
  // eps^2 + eps^3 vs eps^2 - eps^3
  CHECK(difference_valuation(mono(2, 1, 1) + mono(3, 1, 1),
                             mono(2, 1, 1) + mono(3, 1, -1)) ==
        Valuation::finite(Rat(3)));
}

TEST_CASE("truncation propagates through arithmetic") {
  PuiseuxSeries a = PuiseuxSeries::monomial(Rat(1), Cyclotomic(1), 1, Rat(4));
  PuiseuxSeries b = PuiseuxSeries::monomial(Rat(2), Cyclotomic(3), 1, Rat(6));
  PuiseuxSeries sum = a + b;
  REQUIRE(sum.trunc().has_value());
  CHECK(*sum.trunc() == Rat(4));
  PuiseuxSeries prod = a * b;
  // val(a) = 1, val(b) = 2: product known modulo min(1+6, 2+4) = 6
  REQUIRE(prod.trunc().has_value());
  CHECK(*prod.trunc() == Rat(6));
  CHECK(prod.valuation() == Valuation::finite(Rat(3)));
}

TEST_CASE("ring laws and valuation additivity") {
  PuiseuxSeries s1 = mono(1, 2, 1) + mono(2, 1, -3);
  PuiseuxSeries s2 = mono(1, 3, 2);
  PuiseuxSeries s3 = mono(5, 6, 1) + mono(3, 1, 4);
  CHECK((s1 + s2) + s3 == s1 + (s2 + s3));
  CHECK((s1 * s2) * s3 == s1 * (s2 * s3));
  Valuation v = (s1 * s3).valuation();
  REQUIRE(v.is_finite());
  CHECK(v.value == rat(1, 2) + rat(5, 6));
}

TEST_CASE("galois twist multiplies coefficients by roots of unity") {
  // y = eps^{1/2}: twist by j=1 negates it
  PuiseuxSeries s = mono(1, 2, 1);
  CHECK(s.twisted(1) == mono(1, 2, -1));
  CHECK(s.twisted(2) == s);
}

TEST_CASE("series inverse against known expansion") {
  // 1/(1 - eps) = 1 + eps + eps^2 + ... up to requested precision
  PuiseuxSeries one_minus = mono(0, 1, 1) + mono(1, 1, -1);
  PuiseuxSeries inv = one_minus.inverse(Rat(4));
  for (long k = 0; k < 4; ++k) {
    CHECK(inv.coefficient(Rat(k)) == Cyclotomic(1));
  }
  CHECK((inv * one_minus).truncated(Rat(4)).coefficient(Rat(0)) == Cyclotomic(1));
  CHECK((inv * one_minus).truncated(Rat(4)).coefficient(Rat(2)) == Cyclotomic(0));
}

TEST_CASE("monotone ultrametric for pairwise-distinct expansions") {
  PuiseuxSeries u = mono(1, 1, 1) + mono(2, 1, 1);
  PuiseuxSeries v = mono(1, 1, 1) + mono(2, 1, 2);
  PuiseuxSeries w = mono(1, 1, 2);
  Valuation uw = difference_valuation(u, w);
  Valuation uv = difference_valuation(u, v);
  Valuation vw = difference_valuation(v, w);
  REQUIRE(uw.is_finite());
  REQUIRE(uv.is_finite());
  REQUIRE(vw.is_finite());
  CHECK(uw.value >= std::min(uv.value, vw.value));
}
