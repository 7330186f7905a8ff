#include <benchmark/benchmark.h>

#include <random>

#include "tverword/word.hpp"

namespace {

using namespace tvw;

Word random_word(std::mt19937& rng, int len, int letters) {
  std::uniform_int_distribution<int> dist(1, letters);
  Word w(len);
  for (auto& c : w) c = dist(rng);
  return w;
}

void BM_FindColorfulSubword(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  std::mt19937 rng(42);
  const Word w = random_word(rng, len, r);
  std::vector<VertexId> vs;
  for (int v = 1; v <= r; ++v) vs.push_back(v);
  const Face sigma(vs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_colorful_subword(w, sigma, 2));
  }
}
BENCHMARK(BM_FindColorfulSubword)
    ->Args({100, 3})
    ->Args({1000, 3})
    ->Args({1000, 5})
    ->Args({10000, 5});

void BM_DeltaComplex(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  std::mt19937 rng(43);
  const Word w = random_word(rng, len, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_complex(w, 2));
  }
}
BENCHMARK(BM_DeltaComplex)->Arg(20)->Arg(100)->Arg(500);

void BM_DeleteLetter(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  std::vector<VertexId> vs;
  for (int v = 1; v <= r; ++v) vs.push_back(v);
  const Word w = canonical_word(Face(vs), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(delete_letter(w, 2));
  }
}
BENCHMARK(BM_DeleteLetter)->Arg(4)->Arg(8);

void BM_FacetConcatRoundTrip(benchmark::State& state) {
  const auto k = SimplicialComplex::from_facets(
      {Face{1, 2}, Face{1, 4}, Face{2, 3, 4}, Face{3, 5}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_complex(facet_concat_word(k), 5));
  }
}
BENCHMARK(BM_FacetConcatRoundTrip);

}  // namespace
