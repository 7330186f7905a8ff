#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tverword/geometry.hpp"
#include "tverword/simplicial_complex.hpp"
#include "tverword/word.hpp"

namespace tvw {

// Labeled pairwise-disjoint index sets into a host point sequence. Indices
// are 1-based and sorted; parts are nonempty and need not cover the
// sequence.
struct Partition {
  std::map<VertexId, std::vector<int>> parts;

  std::size_t part_count() const { return parts.size(); }
  // All covered indices, ascending.
  std::vector<int> covered() const;
  // Throws unless parts are nonempty, sorted, disjoint and within
  // [1, host_size].
  void validate(std::size_t host_size) const;

  bool operator==(const Partition&) const = default;
};

// Parts reordered by least covered index and relabeled 1..r.
Partition canonicalize(const Partition& partition);

struct TverbergWitness {
  Partition partition;
  Point point;  // lies in the convex hull of every part
};

// Nerve of the parts' convex hulls: a complex on the part labels where sigma
// is a face iff the hulls of the parts in sigma share a point. Faces are
// grown upward level by level (nerves are downward closed).
SimplicialComplex nerve(const PointSequence& sequence,
                        const Partition& partition);

// Word reading off, in sequence order, the label of the part containing
// each covered point; uncovered points are skipped.
Word partition_to_word(const PointSequence& sequence,
                       const Partition& partition);

// Part j = indices of the letters equal to j. Requires |word| = |sequence|;
// inverse of partition_to_word for covering partitions.
Partition word_to_partition(const Word& word, const PointSequence& sequence);

// True iff the label word of the partition is d-colorful; in particular the
// parts then cover exactly (d+1)(r-1)+1 points.
bool is_colorful_partition(const PointSequence& sequence,
                           const Partition& partition, int d);

// All minimal Tverberg partitions with exactly r parts and at most
// (d+1)(r-1)+1 points in total, each with an exact witness point.
// Minimality is verified by deleting every covered point in turn. The
// enumeration order (covered sets by size then lexicographically, set
// partitions in restricted-growth order) fixes the output order, and each
// partition is canonical.
std::vector<TverbergWitness> enumerate_minimal_tverberg(
    const PointSequence& sequence, int r);

// True iff for every 2 <= r <= r_max the minimal Tverberg partitions with r
// parts are exactly the d-colorful partitions (both sides enumerated within
// the (d+1)(r-1)+1 point budget).
bool colorful_minimality_check(const PointSequence& sequence, int d,
                               int r_max);

// First Tverberg partition with r parts in canonical enumeration order
// within the (d+1)(r-1)+1 point budget, or nullopt.
std::optional<TverbergWitness> find_tverberg_partition(
    const PointSequence& sequence, int r);

// For a cone complex K with nerve(sequence, partition) = K, absorbs all
// uncovered points into the part of the least cone vertex, giving a covering
// partition with the same nerve.
Partition extend_partition_for_cone(const SimplicialComplex& complex,
                                    const PointSequence& sequence,
                                    const Partition& partition);

// Text format: one line per part, "label: i1 i2 ...".
Partition read_partition(std::istream& in);
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& partition);

// Partition block followed by "witness: coords".
std::string format_witness(const TverbergWitness& witness);

}  // namespace tvw
