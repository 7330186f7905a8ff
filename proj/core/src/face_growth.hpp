#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <vector>

#include "tverword/simplicial_complex.hpp"

namespace tvw::detail {

// Evaluates pred on 0..count-1, optionally across threads; results come back
// in input order either way.
inline std::vector<char> map_predicate(
    std::size_t count, int degree,
    const std::function<bool(std::size_t)>& pred) {
  std::vector<char> out(count, 0);
  if (degree <= 1 || count < 8) {
    for (std::size_t i = 0; i < count; ++i) out[i] = pred(i) ? 1 : 0;
    return out;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t stride = (count + degree - 1) / degree;
  for (int t = 0; t < degree; ++t) {
    const std::size_t lo = t * stride;
    const std::size_t hi = std::min(count, lo + stride);
    if (lo >= hi) break;
    jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = pred(i) ? 1 : 0;
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

// Builds a downward-closed complex by growing faces level by level: every
// singleton over `vertices` is a face, and a k-face candidate is tested only
// when all its (k-1)-subsets are faces. `has_face` must be monotone
// (downward closed), which both colorful subwords and nerves are.
inline SimplicialComplex grow_faces(
    const std::vector<VertexId>& vertices,
    const std::function<bool(const Face&)>& has_face, int parallel_degree) {
  std::vector<Face> all_faces;
  std::vector<Face> level;
  for (VertexId v : vertices) level.push_back(Face{v});
  all_faces.insert(all_faces.end(), level.begin(), level.end());

  const auto is_known = [](const std::vector<Face>& faces, const Face& f) {
    return std::find(faces.begin(), faces.end(), f) != faces.end();
  };

  for (std::size_t k = 2; k <= vertices.size() && !level.empty(); ++k) {
    std::vector<Face> candidates;
    for (const Face& f : level) {
      for (VertexId v : vertices) {
        if (v <= f.vertices().back()) continue;
        Face cand = f.unite(Face{v});
        bool closed = true;
        for (VertexId u : cand) {
          if (!is_known(level, cand.without(u))) {
            closed = false;
            break;
          }
        }
        if (closed) candidates.push_back(std::move(cand));
      }
    }
    const std::vector<char> hits =
        map_predicate(candidates.size(), parallel_degree,
                      [&](std::size_t i) { return has_face(candidates[i]); });
    std::vector<Face> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (hits[i]) next.push_back(candidates[i]);
    }
    all_faces.insert(all_faces.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return SimplicialComplex::from_facets(std::move(all_faces));
}

}  // namespace tvw::detail
