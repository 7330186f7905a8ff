#include <benchmark/benchmark.h>

#include <random>

#include "tverword/geometry.hpp"
#include "tverword/lp.hpp"

namespace {

using namespace tvw;

void BM_LpFeasible(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  const int rows = static_cast<int>(state.range(1));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  LinearSystem sys;
  sys.num_vars = vars;
  for (int r = 0; r < rows; ++r) {
    Vector row(vars);
    for (auto& v : row) v = coeff(rng);
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(coeff(rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_feasible(sys));
  }
}
BENCHMARK(BM_LpFeasible)->Args({6, 4})->Args({12, 8})->Args({24, 12});

void BM_ConvexHullsIntersect(benchmark::State& state) {
  const auto curve = moment_curve(static_cast<int>(state.range(0)), 2,
                                  Rational(2));
  std::vector<std::vector<Point>> parts(3);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    parts[i % 3].push_back(curve.points[i]);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(convex_hulls_intersect(parts));
  }
}
BENCHMARK(BM_ConvexHullsIntersect)->Arg(7)->Arg(12);

void BM_StrongGeneralPosition(benchmark::State& state) {
  const auto curve = moment_curve(static_cast<int>(state.range(0)), 2,
                                  Rational(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(in_strong_general_position(curve));
  }
}
BENCHMARK(BM_StrongGeneralPosition)->Arg(5)->Arg(6)->Arg(7);

}  // namespace
