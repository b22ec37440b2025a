#include <functional>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rootval/cli.hpp"
#include "rootval/errors.hpp"
#include "rootval/parse.hpp"

using namespace rootval;
using json = nlohmann::json;

namespace {

void check_error(const std::function<void()>& f, const std::string& code,
                 std::optional<long> location = std::nullopt) {
  try {
    f();
    FAIL("expected an error with code " << code);
  } catch (const Error& e) {
    CHECK(e.code() == code);
    if (location) {
      REQUIRE(e.location().has_value());
      CHECK(*e.location() == *location);
    }
  }
}

std::pair<int, std::string> run_to_string(const Request& r) {
  std::ostringstream os;
  int code = run(r, os);
  return {code, os.str()};
}

}  // namespace

TEST_CASE("polynomial parsing") {
  SparsePoly cusp = SparsePoly::variable("y", 2) - SparsePoly::variable("x", 3);
  CHECK(parse_polynomial("y^2 - x^3") == cusp);
  CHECK(parse_polynomial("  y ^ 2-x^3 ") == cusp);
  CHECK(parse_polynomial("-x^3 + y^2") == cusp);

  SparsePoly half = SparsePoly::variable("y", 2) -
                    SparsePoly::variable("x", 4) -
                    SparsePoly(rat(1, 2)) * SparsePoly::variable("x", 2);
  CHECK(parse_polynomial("y^2 - (x^4 + 1/2*x^2)") == half);

  CHECK(parse_polynomial("x*y*(x + y)") ==
        SparsePoly::variable("x", 2) * SparsePoly::variable("y") +
            SparsePoly::variable("x") * SparsePoly::variable("y", 2));

  check_error([] { parse_polynomial("y^2 - z"); }, "UnknownVariable", 6);
  check_error([] { parse_polynomial("y^2 +"); }, "SyntaxError");
  check_error([] { parse_polynomial("y^2) + x"); }, "SyntaxError", 3);
  check_error([] { parse_polynomial("x^-2"); }, "SyntaxError");
  check_error([] { parse_polynomial("1/0"); }, "SyntaxError", 2);

  // canonical text round trip
  for (const char* src : {"y^2 - x^3", "x*y*(x+y)", "y^2 - (x^4 + 1/2*x^2)",
                          "4*a2^3 + 27*a3^2", "0", "x - 1"}) {
    SparsePoly p = parse_polynomial(src);
    CHECK(parse_polynomial(p.str()) == p);
  }
}

TEST_CASE("branch parsing") {
  Branch b = parse_branch("x = t^4; y = t^6 + t^7");
  CHECK(b.d == 4);
  CHECK_FALSE(b.vertical);
  CHECK(b.y.coefficient(Rat(6)) == Cyclotomic(1));
  CHECK(b.y.coefficient(Rat(7)) == Cyclotomic(1));
  REQUIRE(b.y.trunc().has_value());
  CHECK(*b.y.trunc() == Rat(8));  // highest exponent + 1

  Branch c = parse_branch("x = t^2; y = t^3; trunc=10");
  CHECK(c.d == 2);
  CHECK(*c.y.trunc() == Rat(10));

  Branch v = parse_branch("x = 0; y = t");
  CHECK(v.vertical);

  Branch line = parse_branch("x = t^1; y = 0");
  CHECK(line.d == 1);
  CHECK_FALSE(line.y.has_terms());

  check_error([] { parse_branch("x = t^0; y = t"); }, "NonPositiveRamification");
  check_error([] { parse_branch("x = t^-2; y = t"); }, "NonPositiveRamification");
  check_error([] { parse_branch("x = t^2"); }, "SyntaxError");
  check_error([] { parse_branch("x = t^2; y = 1 + t^3"); }, "DegenerateInput");

  for (const char* src :
       {"x = t^4; y = t^6 + t^7", "x = t^2; y = t^3; trunc=10", "x = 0; y = t",
        "x = t^3; y = 2*t^4 - 1/3*t^5"}) {
    Branch parsed = parse_branch(src);
    Branch again = parse_branch(branch_text(parsed));
    CHECK(again.d == parsed.d);
    CHECK(again.vertical == parsed.vertical);
    CHECK(again.y == parsed.y);
  }
}

TEST_CASE("matrix parsing") {
  MatrixSeries m = parse_matrix("d=2; trunc=6; 0; 1; e^3; 0");
  CHECK(m.d() == 2);
  CHECK(*m.trunc() == 6);
  CHECK(m.at(0, 1).coefficient(Rat(0)) == Cyclotomic(1));
  CHECK(m.at(1, 0).coefficient(Rat(3)) == Cyclotomic(1));

  check_error([] { parse_matrix("d=2; trunc=6; 0; 1; e^3"); }, "WrongEntryCount");
  check_error([] { parse_matrix("d=2; trunc=6; 0; 1; e^3; 0; 0"); },
              "WrongEntryCount");
  check_error([] { parse_matrix("d=2; trunc=6; 0; 1; e^-1; 0"); },
              "NegativeExponent");
  check_error([] { parse_matrix("d=2; trunc=6; 0; 1; x; 0"); }, "UnknownVariable");

  for (const char* src : {"d=2; trunc=6; 0; 1; e^3; 0",
                          "d=2; trunc=8; e; 0; 0; 2*e",
                          "d=1; trunc=4; 1/2*e^2 - e"}) {
    MatrixSeries parsed = parse_matrix(src);
    MatrixSeries again = parse_matrix(matrix_text(parsed));
    CHECK(again.d() == parsed.d());
    CHECK(again.trunc() == parsed.trunc());
    for (long i = 0; i < parsed.d(); ++i) {
      for (long j = 0; j < parsed.d(); ++j) {
        CHECK(again.at(i, j) == parsed.at(i, j));
      }
    }
  }
}

TEST_CASE("cli invariants report") {
  Request r;
  r.command = "invariants";
  r.poly = "y^2 - x^3";
  auto [code, text] = run_to_string(r);
  REQUIRE(code == 0);
  json rep = json::parse(text);
  CHECK(rep["command"] == "invariants");
  CHECK(rep["inputs_echo"]["poly"] == "y^2 - x^3");
  CHECK(rep["result"]["mu"] == 2);
  CHECK(rep["result"]["tau"] == 2);
  CHECK(rep["result"]["delta"] == 1);
  CHECK(rep["result"]["branch_count"] == 1);
  CHECK(rep["result"]["milnor_relation_check"] == "PASS");
  CHECK(rep["warnings"].empty());
  CHECK(rep.contains("certificates"));
}

TEST_CASE("cli rootval report matches the documented example") {
  Request r;
  r.command = "rootval";
  r.matrix = "d=2; trunc=6; 0; 1; e^3; 0";
  auto [code, text] = run_to_string(r);
  REQUIRE(code == 0);
  json rep = json::parse(text);
  CHECK(rep["result"]["w_cycles"] == json::parse("[[1,2]]"));
  CHECK(rep["result"]["r"] == json::parse(R"([["","3/2"],["3/2",""]])"));
}

TEST_CASE("cli reports are byte-identical across runs") {
  for (auto setup : std::vector<std::function<void(Request&)>>{
           [](Request& r) {
             r.command = "invariants";
             r.poly = "x*y*(x+y)";
           },
           [](Request& r) {
             r.command = "branch";
             r.branch = "x = t^4; y = t^6 + t^7";
           },
           [](Request& r) {
             r.command = "gkm-check";
             r.a = {"d=2; trunc=8; 0; 1; e^3; 0"};
             r.b = {"d=2; trunc=8; 0; 1; 4*e^3; 0"};
           },
           [](Request& r) {
             r.command = "disc-demo";
             r.n = 4;
           }}) {
    Request r;
    setup(r);
    auto first = run_to_string(r);
    auto second = run_to_string(r);
    CHECK(first.first == 0);
    CHECK(first == second);
  }
}

TEST_CASE("cli error objects and exit codes") {
  Request bad;
  bad.command = "invariants";
  bad.poly = "y^2 - z";
  auto [code, text] = run_to_string(bad);
  CHECK(code == 2);
  json err = json::parse(text);
  CHECK(err["error"] == "UnknownVariable");
  CHECK(err.contains("location"));
  CHECK_FALSE(err.contains("result"));

  Request prec;
  prec.command = "intersect";
  prec.a = {"x = t^2; y = t^3"};
  prec.b = {"x = t^2; y = t^3 + t^4"};
  auto [code3, text3] = run_to_string(prec);
  CHECK(code3 == 3);
  CHECK(json::parse(text3)["error"] == "InsufficientPrecision");

  Request low;
  low.command = "branch";
  low.branch = "x = t^2; y = t^3";
  low.precision = 2;
  CHECK(run_to_string(low).first == 2);

  Request unknown;
  unknown.command = "bogus";
  CHECK(run_to_string(unknown).first == 2);
}

TEST_CASE("cli equising and intersect") {
  Request r;
  r.command = "equising";
  r.a = {"x = t^2; y = t^3; trunc=8", "x = t^1; y = 0"};
  r.b = {"x = t^1; y = 0", "x = t^2; y = t^3; trunc=8"};
  auto [code, text] = run_to_string(r);
  REQUIRE(code == 0);
  json rep = json::parse(text);
  CHECK(rep["result"]["equal"] == true);
  CHECK(rep["result"]["witness_bijection"].size() == 2);

  Request ri;
  ri.command = "intersect";
  ri.a = {"x = t^2; y = t^3; trunc=8"};
  ri.b = {"x = 0; y = t"};
  auto [ci, ti] = run_to_string(ri);
  REQUIRE(ci == 0);
  CHECK(json::parse(ti)["result"]["number"] == 2);
}
