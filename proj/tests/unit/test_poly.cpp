#include "doctest.h"
#include "rootval/echelon.hpp"
#include "rootval/sparse_poly.hpp"

using namespace rootval;

namespace {

SparsePoly var(const std::string& v, unsigned long e = 1) {
  return SparsePoly::variable(v, e);
}

}  // namespace

TEST_CASE("resultant sign convention and linear case") {
  // res_y(y^2 - x, y) = -x with p-rows first
  SparsePoly p = var("y", 2) - var("x");
  CHECK(resultant(p, var("y"), "y") == -var("x"));
  // res_x(x - a, x - b) = a - b
  CHECK(resultant(var("x") - var("a"), var("x") - var("b"), "x") ==
        var("a") - var("b"));
}

TEST_CASE("cubic discriminant resultant") {
  SparsePoly f = var("x", 3) + var("a") * var("x") + var("b");
  SparsePoly fp = SparsePoly(3) * var("x", 2) + var("a");
  SparsePoly r = resultant(f, fp, "x");
  SparsePoly expected = SparsePoly(4) * var("a", 3) + SparsePoly(27) * var("b", 2);
  CHECK(r == expected);
}

TEST_CASE("resultant vanishes exactly on shared roots") {
  SparsePoly x = var("x");
  SparsePoly common = (x - SparsePoly(2)) * (x + SparsePoly(1));
  SparsePoly other = (x - SparsePoly(2)) * (x - SparsePoly(5));
  CHECK(resultant(common, other, "x").is_zero());
  SparsePoly disjoint = (x - SparsePoly(3)) * (x - SparsePoly(5));
  CHECK(!resultant(common, disjoint, "x").is_zero());
}

TEST_CASE("exact polynomial division") {
  SparsePoly a = (var("x") + var("y")).pow(3);
  SparsePoly b = var("x") + var("y");
  auto q = try_divide(a, b);
  REQUIRE(q.has_value());
  CHECK(*q == (var("x") + var("y")).pow(2));
  CHECK(!try_divide(var("x", 2) + SparsePoly(1), var("x") + SparsePoly(1)).has_value());
}

TEST_CASE("substitution and evaluation") {
  SparsePoly f = var("y", 2) - var("x", 3);
  SparsePoly g = f.substituted("y", var("t", 3)).substituted("x", var("t", 2));
  CHECK(g.is_zero());
  CHECK(f.evaluated({{"x", Rat(1)}, {"y", Rat(3)}}) == Rat(8));
}

TEST_CASE("canonical printing is stable") {
  SparsePoly f = var("y", 2) - var("x", 3) + SparsePoly(rat(1, 2)) * var("x") * var("y");
  CHECK(f.str() == "-x^3 + 1/2*x*y + y^2");
}

TEST_CASE("echelon pivot orders") {
  using Vec = std::map<long, Rat>;
  CHECK(echelon_pivot_orders(std::vector<Vec>{{{2, Rat(1)}}, {{3, Rat(1)}}}, 10) ==
        std::set<long>{2, 3});
  CHECK(echelon_pivot_orders(
            std::vector<Vec>{{{2, Rat(1)}, {3, Rat(1)}}, {{2, Rat(1)}}}, 10) ==
        std::set<long>{2, 3});
  CHECK(echelon_pivot_orders(std::vector<Vec>{}, 10).empty());
}

TEST_CASE("echelon pivots are invariant under invertible recombination") {
  using Vec = std::map<long, Rat>;
  std::vector<Vec> vecs = {{{1, Rat(2)}, {4, Rat(1)}},
                           {{1, Rat(1)}, {2, Rat(3)}},
                           {{5, Rat(7)}}};
  auto base = echelon_pivot_orders(vecs, 8);
  // recombine: v0+v1, v1, v0+3*v2 -- same span
  std::vector<Vec> mixed(3);
  auto add_into = [](Vec& dst, const Vec& src, const Rat& f) {
    for (const auto& [o, c] : src) {
      dst[o] += f * c;
      if (dst[o] == 0) dst.erase(o);
    }
  };
  add_into(mixed[0], vecs[0], Rat(1));
  add_into(mixed[0], vecs[1], Rat(1));
  add_into(mixed[1], vecs[1], Rat(1));
  add_into(mixed[2], vecs[0], Rat(1));
  add_into(mixed[2], vecs[2], Rat(3));
  CHECK(echelon_pivot_orders(mixed, 8) == base);
}

TEST_CASE("rank and kernel helpers") {
  std::vector<std::vector<Rat>> m = {{Rat(1), Rat(0), Rat(-2)},
                                     {Rat(0), Rat(1), Rat(-3)}};
  CHECK(rank_of(m) == 2);
  auto kern = right_kernel(m);
  REQUIRE(kern.size() == 1);
  CHECK(kern[0] == std::vector<Rat>{Rat(2), Rat(3), Rat(1)});
}
