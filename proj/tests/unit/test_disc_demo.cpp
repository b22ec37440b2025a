#include <functional>

#include "doctest.h"
#include "rootval/disc_demo.hpp"
#include "rootval/errors.hpp"

using namespace rootval;

namespace {

SparsePoly var(const std::string& name, unsigned long e = 1) {
  return SparsePoly::variable(name, e);
}

void check_error(const std::function<void()>& f, ErrKind kind,
                 const std::string& code) {
  try {
    f();
    FAIL("expected an error with code " << code);
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("family construction and closed forms") {
  MiniversalAn m3 = build_miniversal(3);
  CHECK(m3.F == var("y", 2) - var("x", 3) - var("a2") * var("x") - var("a3"));
  REQUIRE(m3.phi.size() == 2);
  CHECK(m3.phi[0] == SparsePoly(-3) * var("x", 2));
  CHECK(m3.phi[1] == SparsePoly(2) * var("x", 3));

  MiniversalAn m4 = build_miniversal(4);
  REQUIRE(m4.phi.size() == 3);
  CHECK(m4.phi[0] == var("a2"));
  CHECK(m4.phi[1] == -(SparsePoly(4) * var("x", 3) + SparsePoly(2) * var("a2") * var("x")));
  CHECK(m4.phi[2] == SparsePoly(3) * var("x", 4) + var("a2") * var("x", 2));

  MiniversalAn m2 = build_miniversal(2);
  REQUIRE(m2.phi.size() == 1);
  CHECK(m2.phi[0].is_zero());

  check_error([] { build_miniversal(1); }, ErrKind::Precondition, "CapExceeded");
  check_error([] { build_miniversal(10); }, ErrKind::Precondition, "CapExceeded");
}

TEST_CASE("discriminant polynomial") {
  CHECK(discriminant_polynomial(build_miniversal(2)) == var("a2"));

  SparsePoly d3 = discriminant_polynomial(build_miniversal(3));
  CHECK(d3 == SparsePoly(4) * var("a2", 3) + SparsePoly(27) * var("a3", 2));

  // the parametrization lands exactly in the vanishing locus
  for (long n = 2; n <= 6; ++n) {
    MiniversalAn m = build_miniversal(n);
    SparsePoly composed = discriminant_polynomial(m);
    for (long k = 2; k <= n; ++k) {
      composed = composed.substituted("a" + std::to_string(k),
                                      m.phi[static_cast<size_t>(k - 2)]);
    }
    CAPTURE(n);
    CHECK(composed.is_zero());
  }
}

TEST_CASE("rank, hyperplane, and injectivity checks") {
  MiniversalAn m3 = build_miniversal(3);
  NashReport r3 = verify_rank_and_nash(m3, {rat(1), rat(2), rat(-1)});
  CHECK(r3.rank_ok);
  CHECK(r3.hyperplane_only_x);
  CHECK(r3.injective);
  CHECK_FALSE(r3.failed_sample.has_value());
  // hyperplane normal at x is (x, 1)
  REQUIRE(r3.normals.size() == 3);
  CHECK(r3.normals[0] == std::vector<Rat>{rat(1), rat(1)});
  CHECK(r3.normals[1] == std::vector<Rat>{rat(2), rat(1)});
  CHECK(r3.normals[2] == std::vector<Rat>{rat(-1), rat(1)});

  NashReport r4 = verify_rank_and_nash(build_miniversal(4), {rat(1), rat(1, 2)});
  CHECK(r4.rank_ok);
  CHECK(r4.hyperplane_only_x);
  CHECK(r4.injective);
  // normal is (x^2, x, 1)
  REQUIRE(r4.normals.size() == 2);
  CHECK(r4.normals[0] == std::vector<Rat>{rat(1), rat(1), rat(1)});
  CHECK(r4.normals[1] == std::vector<Rat>{rat(1, 4), rat(1, 2), rat(1)});

  for (long n = 5; n <= 7; ++n) {
    NashReport r = verify_rank_and_nash(build_miniversal(n),
                                        {rat(1), rat(2), rat(-1), rat(1, 2)});
    CAPTURE(n);
    CHECK(r.rank_ok);
    CHECK(r.hyperplane_only_x);
    CHECK(r.injective);
  }
}

TEST_CASE("sample preconditions") {
  MiniversalAn m3 = build_miniversal(3);
  check_error([&] { verify_rank_and_nash(m3, {rat(1), rat(1)}); },
              ErrKind::Precondition, "NotDistinct");
  check_error([&] { verify_rank_and_nash(m3, {rat(1), rat(0)}); },
              ErrKind::Precondition, "DegenerateInput");
  check_error([&] { verify_rank_and_nash(m3, {}); },
              ErrKind::Precondition, "DegenerateInput");
  check_error([&] { verify_rank_and_nash(build_miniversal(2), {rat(1)}); },
              ErrKind::Precondition, "DegenerateInput");
}
