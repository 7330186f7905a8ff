#include "tverword/partition.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "enumeration.hpp"
#include "face_growth.hpp"

namespace tvw {

std::vector<int> Partition::covered() const {
  std::vector<int> all;
  for (const auto& [label, indices] : parts) {
    all.insert(all.end(), indices.begin(), indices.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

void Partition::validate(std::size_t host_size) const {
  std::set<int> seen;
  for (const auto& [label, indices] : parts) {
    if (label < 0) {
      throw std::invalid_argument("negative part label");
    }
    if (indices.empty()) {
      throw std::invalid_argument("empty part");
    }
    int prev = 0;
    for (int i : indices) {
      if (i < 1 || i > static_cast<int>(host_size)) {
        throw std::invalid_argument("part index out of range");
      }
      if (i <= prev) {
        throw std::invalid_argument("part indices must be strictly sorted");
      }
      prev = i;
      if (!seen.insert(i).second) {
        throw std::invalid_argument("parts are not disjoint");
      }
    }
  }
}

Partition canonicalize(const Partition& partition) {
  std::vector<std::vector<int>> blocks;
  for (const auto& [label, indices] : partition.parts) {
    blocks.push_back(indices);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Partition out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.parts[static_cast<VertexId>(i) + 1] = std::move(blocks[i]);
  }
  return out;
}

namespace {

std::vector<Point> part_points(const PointSequence& sequence,
                               const std::vector<int>& indices_1based) {
  std::vector<Point> pts;
  pts.reserve(indices_1based.size());
  for (int i : indices_1based) pts.push_back(sequence.points[i - 1]);
  return pts;
}

Partition blocks_to_partition(const std::vector<std::vector<int>>& blocks) {
  // Blocks arrive ordered by least element (restricted-growth order);
  // labels are their ranks, indices are 1-based.
  Partition out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<int> indices;
    indices.reserve(blocks[i].size());
    for (int e : blocks[i]) indices.push_back(e + 1);
    out.parts[static_cast<VertexId>(i) + 1] = std::move(indices);
  }
  return out;
}

}  // namespace

SimplicialComplex nerve(const PointSequence& sequence,
                        const Partition& partition) {
  partition.validate(sequence.size());
  if (partition.parts.empty()) {
    throw std::invalid_argument("nerve of an empty partition");
  }
  std::vector<VertexId> labels;
  for (const auto& [label, indices] : partition.parts) {
    labels.push_back(label);
  }
  return detail::grow_faces(
      labels,
      [&](const Face& sigma) {
        std::vector<std::vector<Point>> parts;
        for (VertexId label : sigma) {
          parts.push_back(part_points(sequence, partition.parts.at(label)));
        }
        return convex_hulls_intersect(parts).has_value();
      },
      /*parallel_degree=*/1);
}

Word partition_to_word(const PointSequence& sequence,
                       const Partition& partition) {
  partition.validate(sequence.size());
  std::map<int, VertexId> label_of_index;
  for (const auto& [label, indices] : partition.parts) {
    for (int i : indices) label_of_index[i] = label;
  }
  Word out;
  out.reserve(label_of_index.size());
  for (const auto& [index, label] : label_of_index) out.push_back(label);
  return out;
}

Partition word_to_partition(const Word& word, const PointSequence& sequence) {
  if (word.size() != sequence.size()) {
    throw std::invalid_argument("word length must match the point count");
  }
  Partition out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    out.parts[word[i]].push_back(static_cast<int>(i) + 1);
  }
  return out;
}

bool is_colorful_partition(const PointSequence& sequence,
                           const Partition& partition, int d) {
  return is_colorful(partition_to_word(sequence, partition), d);
}

std::vector<TverbergWitness> enumerate_minimal_tverberg(
    const PointSequence& sequence, int r) {
  if (r < 2) {
    throw std::invalid_argument("enumerate_minimal_tverberg needs r >= 2");
  }
  const int n = static_cast<int>(sequence.size());
  const int budget = (sequence.dim + 1) * (r - 1) + 1;
  std::vector<TverbergWitness> out;
  for (int m = r; m <= std::min(budget, n); ++m) {
    detail::for_each_subset(n, m, [&](const std::vector<int>& pick) {
      detail::for_each_set_partition(
          pick, r, m, [&](const std::vector<std::vector<int>>& blocks) {
            std::vector<std::vector<Point>> parts;
            parts.reserve(blocks.size());
            for (const auto& block : blocks) {
              std::vector<Point> pts;
              for (int i : block) pts.push_back(sequence.points[i]);
              parts.push_back(std::move(pts));
            }
            const auto witness = convex_hulls_intersect(parts);
            if (!witness) return true;
            // Minimal iff deleting any covered point kills the common
            // point; removing a singleton part's point always does.
            bool minimal = true;
            for (std::size_t bi = 0; bi < parts.size() && minimal; ++bi) {
              if (parts[bi].size() == 1) continue;
              for (std::size_t x = 0; x < parts[bi].size() && minimal; ++x) {
                auto reduced = parts;
                reduced[bi].erase(reduced[bi].begin() + x);
                if (convex_hulls_intersect(reduced)) minimal = false;
              }
            }
            if (minimal) {
              out.push_back(
                  TverbergWitness{blocks_to_partition(blocks), *witness});
            }
            return true;
          });
      return true;
    });
  }
  return out;
}

bool colorful_minimality_check(const PointSequence& sequence, int d,
                               int r_max) {
  if (r_max < 2) {
    throw std::invalid_argument("colorful_minimality_check needs r_max >= 2");
  }
  const int n = static_cast<int>(sequence.size());
  for (int r = 2; r <= r_max; ++r) {
    std::set<std::string> minimal_keys;
    for (const TverbergWitness& w : enumerate_minimal_tverberg(sequence, r)) {
      minimal_keys.insert(format_partition(w.partition));
    }
    std::set<std::string> colorful_keys;
    const int total = (d + 1) * (r - 1) + 1;
    if (total <= n) {
      detail::for_each_subset(n, total, [&](const std::vector<int>& pick) {
        detail::for_each_set_partition(
            pick, r, total, [&](const std::vector<std::vector<int>>& blocks) {
              const Partition partition = blocks_to_partition(blocks);
              if (is_colorful_partition(sequence, partition, d)) {
                colorful_keys.insert(format_partition(partition));
              }
              return true;
            });
        return true;
      });
    }
    if (minimal_keys != colorful_keys) return false;
  }
  return true;
}

std::optional<TverbergWitness> find_tverberg_partition(
    const PointSequence& sequence, int r) {
  if (r < 2) {
    throw std::invalid_argument("find_tverberg_partition needs r >= 2");
  }
  const int n = static_cast<int>(sequence.size());
  const int budget = (sequence.dim + 1) * (r - 1) + 1;
  std::optional<TverbergWitness> found;
  for (int m = r; m <= std::min(budget, n) && !found; ++m) {
    detail::for_each_subset(n, m, [&](const std::vector<int>& pick) {
      return detail::for_each_set_partition(
          pick, r, m, [&](const std::vector<std::vector<int>>& blocks) {
            std::vector<std::vector<Point>> parts;
            for (const auto& block : blocks) {
              std::vector<Point> pts;
              for (int i : block) pts.push_back(sequence.points[i]);
              parts.push_back(std::move(pts));
            }
            const auto witness = convex_hulls_intersect(parts);
            if (!witness) return true;
            found = TverbergWitness{blocks_to_partition(blocks), *witness};
            return false;
          });
    });
  }
  return found;
}

Partition extend_partition_for_cone(const SimplicialComplex& complex,
                                    const PointSequence& sequence,
                                    const Partition& partition) {
  const Face cone = complex.cone_vertices();
  if (cone.empty()) {
    throw std::invalid_argument("complex is not a cone");
  }
  if (nerve(sequence, partition) != complex) {
    throw std::invalid_argument("partition does not induce the complex");
  }
  const VertexId apex = cone.vertices().front();
  Partition out = partition;
  const std::vector<int> covered = partition.covered();
  std::set<int> covered_set(covered.begin(), covered.end());
  auto& apex_part = out.parts.at(apex);
  for (int i = 1; i <= static_cast<int>(sequence.size()); ++i) {
    if (!covered_set.count(i)) apex_part.push_back(i);
  }
  std::sort(apex_part.begin(), apex_part.end());
  return out;
}

Partition read_partition(std::istream& in) {
  Partition out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream probe(line);
    std::string first;
    if (!(probe >> first)) continue;
    if (first.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("expected 'label: indices' line, got '" +
                               line + "'");
    }
    VertexId label = 0;
    try {
      std::size_t used = 0;
      const std::string head = line.substr(0, colon);
      label = std::stoi(head, &used);
      std::istringstream rest(head.substr(used));
      std::string leftover;
      if ((rest >> leftover) || label < 0) throw std::invalid_argument(head);
    } catch (const std::exception&) {
      throw std::runtime_error("bad part label in '" + line + "'");
    }
    if (out.parts.count(label)) {
      throw std::runtime_error("duplicate part label " +
                               std::to_string(label));
    }
    std::istringstream rest(line.substr(colon + 1));
    std::string token;
    std::vector<int> indices;
    while (rest >> token) {
      if (token.front() == '#') break;
      try {
        std::size_t used = 0;
        const int idx = std::stoi(token, &used);
        if (used != token.size() || idx < 1) throw std::invalid_argument(token);
        indices.push_back(idx);
      } catch (const std::exception&) {
        throw std::runtime_error("bad index token '" + token + "'");
      }
    }
    if (indices.empty()) {
      throw std::runtime_error("empty part in '" + line + "'");
    }
    std::sort(indices.begin(), indices.end());
    out.parts[label] = std::move(indices);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  std::istringstream in(text);
  return read_partition(in);
}

std::string format_partition(const Partition& partition) {
  std::string out;
  for (const auto& [label, indices] : partition.parts) {
    out += std::to_string(label);
    out += ':';
    for (int i : indices) {
      out += ' ';
      out += std::to_string(i);
    }
    out += '\n';
  }
  return out;
}

std::string format_witness(const TverbergWitness& witness) {
  return format_partition(witness.partition) + "witness: " +
         format_point(witness.point) + "\n";
}

}  // namespace tvw
