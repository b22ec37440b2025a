#include <benchmark/benchmark.h>

#include "rootval/branch.hpp"
#include "rootval/local_algebra.hpp"
#include "rootval/newton_puiseux.hpp"
#include "rootval/parse.hpp"
#include "rootval/rootval_datum.hpp"

using namespace rootval;

namespace {

Branch branch_467() {
  Branch b;
  b.d = 4;
  b.y = PuiseuxSeries::from_terms(
      {{Rat(6), Cyclotomic(1)}, {Rat(7), Cyclotomic(1)}}, 1);
  return b;
}

void BM_branch_delta(benchmark::State& state) {
  Branch b = branch_467();
  for (auto _ : state) benchmark::DoNotOptimize(branch_delta(b).value);
}
BENCHMARK(BM_branch_delta);

void BM_milnor_number(benchmark::State& state) {
  SparsePoly f = parse_polynomial("y^2 - x^5");
  for (auto _ : state) benchmark::DoNotOptimize(milnor_number(f).value);
}
BENCHMARK(BM_milnor_number);

void BM_resultant(benchmark::State& state) {
  SparsePoly p = parse_polynomial("x^5 + a2*x^3 + a3*x^2 + a4*x + a5");
  SparsePoly q = p.derivative("x");
  for (auto _ : state) benchmark::DoNotOptimize(resultant(p, q, "x"));
}
BENCHMARK(BM_resultant);

void BM_newton_puiseux(benchmark::State& state) {
  // y^2 - e^2 (1 + e), expanded to order 12
  PuiseuxSeries one = PuiseuxSeries::monomial(Rat(0), Cyclotomic(1));
  std::vector<PuiseuxSeries> p = {
      -(PuiseuxSeries::monomial(Rat(2), Cyclotomic(1)) +
        PuiseuxSeries::monomial(Rat(3), Cyclotomic(1))),
      PuiseuxSeries(), one};
  for (auto _ : state) benchmark::DoNotOptimize(puiseux_expansions(p, Rat(12)));
}
BENCHMARK(BM_newton_puiseux);

void BM_root_valuation_datum(benchmark::State& state) {
  std::vector<Branch> branches = {branch_467()};
  for (auto _ : state) benchmark::DoNotOptimize(root_valuation_datum(branches));
}
BENCHMARK(BM_root_valuation_datum);

void BM_intersection_number(benchmark::State& state) {
  Branch a = branch_467();
  Branch b;
  b.d = 2;
  b.y = PuiseuxSeries::from_terms({{Rat(3), Cyclotomic(1)}}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_number(a, b));
}
BENCHMARK(BM_intersection_number);

}  // namespace

BENCHMARK_MAIN();
