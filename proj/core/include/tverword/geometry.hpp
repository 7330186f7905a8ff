#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tverword/linalg.hpp"
#include "tverword/rational.hpp"

namespace tvw {

using Point = std::vector<Rational>;

// Ordered list of points sharing an ambient dimension. Order matters: label
// words read points in sequence order.
struct PointSequence {
  int dim = 0;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }

  bool operator==(const PointSequence&) const = default;
};

// An affine subspace, either empty or basepoint + span(directions) with the
// directions linearly independent. dim() is -1 for the empty flat.
struct AffineFlat {
  bool empty = true;
  Point basepoint;
  std::vector<Point> directions;

  int dim() const {
    return empty ? -1 : static_cast<int>(directions.size());
  }
};

struct HullIntersection {
  Point witness;
  // Convex-combination weights per part; the witness is the common
  // barycenter. Being a basic LP solution, at most (d+1)(r-1)+1 of the
  // weights are nonzero in total.
  std::vector<std::vector<Rational>> weights;
};

// Exact common point of conv(parts[0]), ..., conv(parts[r-1]), or nullopt
// when the hulls have empty intersection. Each part must be nonempty and all
// points must share a dimension.
std::optional<HullIntersection> convex_hulls_intersect_detail(
    const std::vector<std::vector<Point>>& parts);
std::optional<Point> convex_hulls_intersect(
    const std::vector<std::vector<Point>>& parts);

// Exact intersection of the affine hulls of the parts.
AffineFlat affine_intersection(const std::vector<std::vector<Point>>& parts);

// True iff for every k <= d+1, every k points of the sequence are affinely
// independent.
bool in_general_position(const PointSequence& sequence);

// Perles–Sigron criterion, assuming general position (throws otherwise):
// for every r >= 2 and every family of r disjoint nonempty subsets with at
// most d points each and m <= (d+1)(r-1)+1 points in total, the affine hulls
// intersect in a single point when m = (d+1)(r-1)+1 and not at all when
// m <= (d+1)(r-1). Exhaustive over all such families; practical for
// |sequence| <= 8 in dimension <= 2.
bool in_strong_general_position(const PointSequence& sequence);

// Points (t_i, t_i^2, ..., t_i^d) with t_i = base^i for i = 1..n. Validity
// for Tverberg purposes is not assumed; callers check it with
// colorful_minimality_check.
PointSequence moment_curve(int n, int d, const Rational& base);

// Text format: first line "dim d", then one point per line, coordinates as
// "num/den" or plain integers, space-separated.
PointSequence read_points(std::istream& in);
PointSequence parse_points(const std::string& text);
std::string format_points(const PointSequence& sequence);

std::string format_point(const Point& point);

// Parts file: "dim d" first, then each part introduced by a line "part"
// followed by its points.
std::vector<std::vector<Point>> read_point_parts(std::istream& in, int* dim);

}  // namespace tvw
