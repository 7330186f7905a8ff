#pragma once

// Brute-force reference implementations used to pin down expected values.
// Everything here is deliberately independent of the library's search and
// pivoting code paths: colorful subwords are found by enumerating index
// subsets, and LP feasibility by enumerating basic solutions with a local
// row reduction.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "tverword/geometry.hpp"
#include "tverword/linalg.hpp"
#include "tverword/simplicial_complex.hpp"
#include "tverword/word.hpp"

namespace tvw::testing {

// Definition check, written from scratch: blocks of length r overlapping in
// one position, each a permutation of sigma.
inline bool oracle_blocks_colorful(const std::vector<VertexId>& letters,
                                   const std::vector<VertexId>& sigma_sorted,
                                   int d) {
  const std::size_t r = sigma_sorted.size();
  if (r < 2 || d < 0) return false;
  if (letters.size() != static_cast<std::size_t>(d + 1) * (r - 1) + 1) {
    return false;
  }
  for (int b = 0; b <= d; ++b) {
    std::vector<VertexId> block(
        letters.begin() + static_cast<std::size_t>(b) * (r - 1),
        letters.begin() + static_cast<std::size_t>(b) * (r - 1) + r);
    std::sort(block.begin(), block.end());
    if (block != sigma_sorted) return false;
  }
  return true;
}

// Enumerates k-subsets of `universe` (which must be ascending) in
// lexicographic order; the callback returns false to stop.
inline bool oracle_for_each_combination(
    const std::vector<int>& universe, int k,
    const std::function<bool(const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(universe.size());
  if (k > n) return true;
  std::vector<int> pick(k);
  std::function<bool(int, int)> rec = [&](int start, int depth) {
    if (depth == k) return fn(pick);
    for (int i = start; i <= n - (k - depth); ++i) {
      pick[depth] = universe[i];
      if (!rec(i + 1, depth + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

// Lexicographically least certificate positions (1-based) by exhaustive
// subset enumeration, or nullopt.
inline std::optional<std::vector<int>> oracle_find_colorful(const Word& word,
                                                            const Face& sigma,
                                                            int d) {
  const std::size_t r = sigma.size();
  if (r == 1) {
    const VertexId target = sigma.vertices().front();
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] == target) return std::vector<int>{static_cast<int>(i) + 1};
    }
    return std::nullopt;
  }
  const int need = (d + 1) * (static_cast<int>(r) - 1) + 1;
  std::vector<int> candidates;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (sigma.contains(word[i])) candidates.push_back(static_cast<int>(i) + 1);
  }
  std::optional<std::vector<int>> found;
  oracle_for_each_combination(
      candidates, need, [&](const std::vector<int>& pick) {
        std::vector<VertexId> letters;
        letters.reserve(pick.size());
        for (int p : pick) letters.push_back(word[p - 1]);
        if (oracle_blocks_colorful(letters, sigma.vertices(), d)) {
          found = pick;
          return false;
        }
        return true;
      });
  return found;
}

// Exhaustive represented complex.
inline SimplicialComplex oracle_delta(const Word& word, int d) {
  std::vector<Face> faces;
  const Face alpha = alphabet(word);
  const auto& letters = alpha.vertices();
  const std::size_t n = letters.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(letters[i]);
    }
    const Face sigma(sub);
    if (oracle_find_colorful(word, sigma, d)) faces.push_back(sigma);
  }
  return SimplicialComplex::from_facets(std::move(faces));
}

// Local row reduction for the LP oracle; returns nullopt when inconsistent,
// otherwise the unique solution if the columns are independent, or nullopt
// if they are not (such subsets are simply skipped by the caller).
inline std::optional<Vector> oracle_solve_unique(const Matrix& a,
                                                 const Vector& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  Matrix m = a;
  for (std::size_t r = 0; r < rows; ++r) m[r].push_back(b[r]);
  std::size_t pivot_row = 0;
  std::vector<int> pivot_col_of(cols, -1);
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t pr = pivot_row;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pivot_row], m[pr]);
    const Rational inv = m[pivot_row][c];
    for (auto& x : m[pivot_row]) x /= inv;
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == pivot_row || m[rr][c] == 0) continue;
      const Rational f = m[rr][c];
      for (std::size_t j = c; j <= cols; ++j) m[rr][j] -= f * m[pivot_row][j];
    }
    pivot_col_of[c] = static_cast<int>(pivot_row);
    ++pivot_row;
  }
  for (std::size_t rr = pivot_row; rr < rows; ++rr) {
    if (m[rr][cols] != 0) return std::nullopt;  // inconsistent
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_col_of[c] < 0) return std::nullopt;  // dependent columns
  }
  Vector x(cols, Rational(0));
  for (std::size_t c = 0; c < cols; ++c) x[c] = m[pivot_col_of[c]][cols];
  return x;
}

// Feasibility of {a x = b, x >= 0} by enumerating basic solutions: feasible
// iff some independent column subset solves the system with nonnegative
// coordinates.
inline bool oracle_lp_feasible(const Matrix& a, const Vector& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a.front().size());
  std::vector<int> all_cols(cols);
  for (int c = 0; c < cols; ++c) all_cols[c] = c;
  for (int size = 0; size <= std::min(rows, cols); ++size) {
    bool feasible = false;
    oracle_for_each_combination(
        all_cols, size, [&](const std::vector<int>& pick) {
          Matrix sub(rows, Vector(pick.size()));
          for (int r = 0; r < rows; ++r) {
            for (std::size_t j = 0; j < pick.size(); ++j) {
              sub[r][j] = a[r][pick[j]];
            }
          }
          const auto x = oracle_solve_unique(sub, b);
          if (!x) return true;
          for (const Rational& v : *x) {
            if (v < 0) return true;
          }
          feasible = true;
          return false;
        });
    if (feasible) return true;
  }
  return false;
}

// Exact membership of a point in a convex hull, via the basic-solution
// oracle.
inline bool oracle_in_hull(const Point& x, const std::vector<Point>& points) {
  const int d = static_cast<int>(x.size());
  const int n = static_cast<int>(points.size());
  Matrix a(d + 1, Vector(n, Rational(0)));
  Vector b(d + 1, Rational(0));
  for (int j = 0; j < n; ++j) a[0][j] = 1;
  b[0] = 1;
  for (int c = 0; c < d; ++c) {
    for (int j = 0; j < n; ++j) a[c + 1][j] = points[j][c];
    b[c + 1] = x[c];
  }
  return oracle_lp_feasible(a, b);
}

// Hull intersection on the line: intervals [min, max] must overlap.
inline bool oracle_intervals_intersect(
    const std::vector<std::vector<Rational>>& parts) {
  Rational lo = parts.front().front();
  Rational hi = lo;
  bool first = true;
  for (const auto& part : parts) {
    Rational mn = part.front();
    Rational mx = part.front();
    for (const Rational& v : part) {
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    if (first) {
      lo = mn;
      hi = mx;
      first = false;
    } else {
      lo = std::max(lo, mn);
      hi = std::min(hi, mx);
    }
  }
  return lo <= hi;
}

// Partitions of elems into exactly r nonempty blocks; canonical block order.
inline void oracle_for_each_set_partition(
    const std::vector<int>& elems, int r,
    const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  std::vector<std::vector<int>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == elems.size()) {
      if (static_cast<int>(blocks.size()) == r) fn(blocks);
      return;
    }
    // Index-based: the recursion grows `blocks`, which may reallocate.
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      blocks[bi].push_back(elems[i]);
      rec(i + 1);
      blocks[bi].pop_back();
    }
    if (static_cast<int>(blocks.size()) < r) {
      blocks.push_back({elems[i]});
      rec(i + 1);
      blocks.pop_back();
    }
  };
  rec(0);
}

inline Word random_word(std::mt19937& rng, int max_len, int max_letter) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> letter_dist(1, max_letter);
  Word w(len_dist(rng));
  for (auto& c : w) c = letter_dist(rng);
  return w;
}

// d-colorful word on sigma assembled from random block permutations, each
// block after the first starting with the previous one's final letter.
inline Word random_colorful_word(std::mt19937& rng, const Face& sigma,
                                 int d) {
  std::vector<VertexId> block = sigma.vertices();
  std::shuffle(block.begin(), block.end(), rng);
  Word w = block;
  for (int b = 1; b <= d; ++b) {
    std::vector<VertexId> rest;
    for (VertexId v : sigma) {
      if (v != w.back()) rest.push_back(v);
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    w.insert(w.end(), rest.begin(), rest.end());
  }
  return w;
}

// Random integer-coordinate points in general position.
inline PointSequence random_gp_points(std::mt19937& rng, int n, int d,
                                      int coord_range) {
  std::uniform_int_distribution<int> coord(0, coord_range);
  while (true) {
    PointSequence seq;
    seq.dim = d;
    for (int i = 0; i < n; ++i) {
      Point p(d);
      for (auto& c : p) c = coord(rng);
      seq.points.push_back(std::move(p));
    }
    if (in_general_position(seq)) return seq;
  }
}

// Applies a vertex relabeling to a complex.
inline SimplicialComplex relabel_complex(
    const SimplicialComplex& complex,
    const std::map<VertexId, VertexId>& relabeling) {
  std::vector<Face> facets;
  for (const Face& f : complex.facets()) {
    std::vector<VertexId> vs;
    for (VertexId v : f) vs.push_back(relabeling.at(v));
    facets.emplace_back(std::move(vs));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace tvw::testing
