#include <benchmark/benchmark.h>

#include "tverword/partition.hpp"

namespace {

using namespace tvw;

PointSequence line_points(int n) {
  PointSequence seq;
  seq.dim = 1;
  for (int i = 0; i < n; ++i) {
    seq.points.push_back({Rational(2 * i + 1, i + 2)});
  }
  return seq;
}

void BM_EnumerateMinimalTverberg(benchmark::State& state) {
  const auto points = line_points(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_minimal_tverberg(points, 3));
  }
}
BENCHMARK(BM_EnumerateMinimalTverberg)->Arg(5)->Arg(7);

void BM_FindTverbergPlane(benchmark::State& state) {
  const auto curve = moment_curve(7, 2, Rational(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_tverberg_partition(curve, 3));
  }
}
BENCHMARK(BM_FindTverbergPlane);

void BM_ColorfulMinimalityCheck(benchmark::State& state) {
  const auto curve = moment_curve(7, 2, Rational(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(colorful_minimality_check(curve, 2, 3));
  }
}
BENCHMARK(BM_ColorfulMinimalityCheck);

}  // namespace
