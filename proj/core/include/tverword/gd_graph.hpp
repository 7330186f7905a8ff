#pragma once

#include <cstdint>
#include <optional>

#include "tverword/simplicial_complex.hpp"
#include "tverword/word.hpp"

namespace tvw {

// Parameters for the bipartite family G_d: part A has n vertices and, for
// every subset sigma of A, part B holds `multiplicity` vertices whose
// neighborhood is exactly sigma. The construction's own multiplicity,
// (d+2)^K with K = 2n(n-1)(d+2)+1, is astronomically large; `multiplicity`
// caps it at something buildable, and max_vertices guards the total size.
struct GdParams {
  int n = 1;
  int d = 1;
  std::int64_t multiplicity = 1;
  std::int64_t max_vertices = 1'000'000;

  std::int64_t derived_k() const {
    return 2ll * n * (n - 1) * (d + 2) + 1;
  }
};

// Builds the capped G_d graph as a 1-dimensional complex. Vertices are
// numbered deterministically: A = 1..n, then B grouped by neighborhood in
// subset-lexicographic order, `multiplicity` copies each. Throws when the
// parameters are invalid or the vertex count exceeds max_vertices.
SimplicialComplex build_gd(const GdParams& params);

// Bounded exhaustive search for a word with delta_complex(word, d) = K,
// shortest first and lexicographically least within each length, using
// letters from K's vertex set. Prefixes whose complex already contains a
// non-face of K are pruned (faces only accumulate as letters are appended).
// nullopt means no word of length <= max_len exists.
std::optional<Word> search_word(const SimplicialComplex& complex, int d,
                                int max_len);

}  // namespace tvw
