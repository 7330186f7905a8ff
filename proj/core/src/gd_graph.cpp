#include "tverword/gd_graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace tvw {

SimplicialComplex build_gd(const GdParams& params) {
  if (params.n < 1 || params.d < 1 || params.multiplicity < 1 ||
      params.max_vertices < 1) {
    throw std::invalid_argument("invalid G_d parameters");
  }
  if (params.n >= 62) {
    throw std::overflow_error("G_d vertex count exceeds the configured cap");
  }
  const std::int64_t cap =
      std::min<std::int64_t>(params.max_vertices,
                             std::numeric_limits<VertexId>::max());
  const std::int64_t num_subsets = std::int64_t{1} << params.n;
  if (params.multiplicity > (cap - params.n) / num_subsets) {
    throw std::overflow_error("G_d vertex count exceeds the configured cap");
  }

  // Subsets of A = {1..n} sorted lexicographically as vertex lists.
  std::vector<std::vector<VertexId>> subsets;
  subsets.reserve(static_cast<std::size_t>(num_subsets));
  for (std::int64_t mask = 0; mask < num_subsets; ++mask) {
    std::vector<VertexId> sigma;
    for (int a = 0; a < params.n; ++a) {
      if (mask & (std::int64_t{1} << a)) sigma.push_back(a + 1);
    }
    subsets.push_back(std::move(sigma));
  }
  std::sort(subsets.begin(), subsets.end());

  std::vector<Face> faces;
  VertexId next = params.n + 1;
  for (const auto& sigma : subsets) {
    for (std::int64_t copy = 0; copy < params.multiplicity; ++copy) {
      const VertexId b = next++;
      if (sigma.empty()) {
        faces.push_back(Face{b});
      } else {
        for (VertexId a : sigma) faces.push_back(Face{a, b});
      }
    }
  }
  return SimplicialComplex::from_facets(std::move(faces));
}

namespace {

// All faces of the complex as alphabet bitmasks (empty face excluded),
// where bit i stands for letters[i].
std::vector<char> face_masks(const SimplicialComplex& complex,
                             const std::vector<VertexId>& letters) {
  const std::size_t r = letters.size();
  std::vector<char> is_face(std::size_t{1} << r, 0);
  for (const Face& facet : complex.facets()) {
    unsigned facet_mask = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (facet.contains(letters[i])) facet_mask |= 1u << i;
    }
    // All nonempty submasks of the facet.
    for (unsigned sub = facet_mask; sub != 0; sub = (sub - 1) & facet_mask) {
      is_face[sub] = 1;
    }
  }
  return is_face;
}

// Exhaustive shortlex search specialised to alphabets of at most 6 letters.
// One reachable-state automaton per alphabet subset s: row (s, b) has bit m
// set when some subword of the prefix occupies block b of an s-colorful
// pattern with the letters m consumed in that block. Appending a letter
// only adds states, so backtracking replays an undo log. The search prunes
// as soon as a non-face of the target is accepted.
std::optional<Word> search_word_small(const SimplicialComplex& complex, int d,
                                      int max_len,
                                      const std::vector<VertexId>& letters) {
  const std::size_t r = letters.size();
  const unsigned subsets = 1u << r;
  const int blocks = d + 1;
  const std::vector<char> is_target = face_masks(complex, letters);
  unsigned target_count = 0;
  for (unsigned s = 1; s < subsets; ++s) target_count += is_target[s];

  // For letter bit i, the set of masks m that already contain i.
  std::vector<std::uint64_t> contains_bit(r, 0);
  for (unsigned m = 0; m < subsets; ++m) {
    for (std::size_t i = 0; i < r; ++i) {
      if (m & (1u << i)) contains_bit[i] |= std::uint64_t{1} << m;
    }
  }

  const int stride = blocks + 2;
  std::vector<std::uint64_t> rows(subsets * stride, 0);
  std::vector<char> accepted(subsets, 0);
  const auto row_at = [&](unsigned s, int b) -> std::uint64_t& {
    return rows[s * stride + b];
  };

  // Undo logs with per-depth watermarks.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> row_log;
  std::vector<unsigned> accept_log;

  Word prefix;
  std::optional<Word> found;
  unsigned accepted_count = 0;

  // Feeds letter bit i to every subset automaton containing it; returns
  // false when a non-face of the target gets accepted.
  const auto advance = [&](std::size_t i) {
    for (unsigned s = 1; s < subsets; ++s) {
      if (!(s & (1u << i)) || accepted[s]) continue;
      if ((s & (s - 1)) == 0) {
        // Singleton alphabet: one occurrence suffices.
        accepted[s] = 1;
      } else {
        for (int b = blocks; b >= 1; --b) {
          std::uint64_t& row = row_at(s, b);
          const std::uint64_t grown = (row & ~contains_bit[i])
                                      << (std::uint64_t{1} << i);
          const std::uint64_t fresh = grown & ~row;
          if (!fresh) continue;
          row_log.emplace_back(s * stride + b, row);
          row |= fresh;
          if (fresh & (std::uint64_t{1} << s)) {
            // A block just saw its whole alphabet.
            if (b == blocks) {
              accepted[s] = 1;
            } else {
              std::uint64_t& next = row_at(s, b + 1);
              row_log.emplace_back(s * stride + b + 1, next);
              next |= std::uint64_t{1} << (1u << i);
            }
          }
        }
      }
      if (accepted[s]) {
        accept_log.push_back(s);
        if (!is_target[s]) return false;
        ++accepted_count;
      }
    }
    return true;
  };

  std::function<void(int)> dfs = [&](int target_len) {
    if (static_cast<int>(prefix.size()) == target_len) {
      if (accepted_count == target_count) found = prefix;
      return;
    }
    for (std::size_t i = 0; i < r; ++i) {
      prefix.push_back(letters[i]);
      const std::size_t row_mark = row_log.size();
      const std::size_t accept_mark = accept_log.size();
      if (advance(i)) dfs(target_len);
      while (accept_log.size() > accept_mark) {
        const unsigned s = accept_log.back();
        accept_log.pop_back();
        if (is_target[s]) --accepted_count;
        accepted[s] = 0;
      }
      while (row_log.size() > row_mark) {
        rows[row_log.back().first] = row_log.back().second;
        row_log.pop_back();
      }
      prefix.pop_back();
      if (found) return;
    }
  };

  for (int len = 1; len <= max_len && !found; ++len) {
    std::fill(rows.begin(), rows.end(), 0);
    std::fill(accepted.begin(), accepted.end(), 0);
    for (unsigned s = 1; s < subsets; ++s) row_at(s, 1) = 1;
    row_log.clear();
    accept_log.clear();
    accepted_count = 0;
    dfs(len);
  }
  return found;
}

// Plain fallback for alphabets too large for the bit-parallel automaton:
// recompute the represented complex per prefix. Only sensible for very
// short length bounds.
std::optional<Word> search_word_generic(const SimplicialComplex& complex,
                                        int d, int max_len,
                                        const std::vector<VertexId>& letters) {
  const auto within = [&](const SimplicialComplex& delta) {
    for (const Face& f : delta.facets()) {
      if (!f.empty() && !complex.is_face(f)) return false;
    }
    return true;
  };
  Word prefix;
  std::optional<Word> found;
  std::function<void(int)> dfs = [&](int target_len) {
    if (found) return;
    const SimplicialComplex delta = delta_complex(prefix, d);
    if (!within(delta)) return;
    if (static_cast<int>(prefix.size()) == target_len) {
      if (delta == complex) found = prefix;
      return;
    }
    for (VertexId v : letters) {
      prefix.push_back(v);
      dfs(target_len);
      prefix.pop_back();
      if (found) return;
    }
  };
  for (int len = 1; len <= max_len && !found; ++len) {
    dfs(len);
  }
  return found;
}

}  // namespace

std::optional<Word> search_word(const SimplicialComplex& complex, int d,
                                int max_len) {
  if (max_len < 1) {
    throw std::invalid_argument("max_len must be at least 1");
  }
  if (d < 0) {
    throw std::invalid_argument("d must be non-negative");
  }
  if (complex.is_empty_complex()) return Word{};
  const std::vector<VertexId> letters = complex.vertices().vertices();
  if (letters.size() <= 6) {
    return search_word_small(complex, d, max_len, letters);
  }
  return search_word_generic(complex, d, max_len, letters);
}

}  // namespace tvw
