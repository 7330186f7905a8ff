#include "tverword/geometry.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace tvw {
namespace {

Point pt(std::initializer_list<int> coords) {
  Point p;
  for (int c : coords) p.emplace_back(c);
  return p;
}

TEST(ConvexHullsIntersect, Examples) {
  const auto crossing = convex_hulls_intersect(
      {{pt({0, 0}), pt({2, 2})}, {pt({0, 2}), pt({2, 0})}});
  ASSERT_TRUE(crossing.has_value());
  EXPECT_EQ(*crossing, pt({1, 1}));

  EXPECT_FALSE(convex_hulls_intersect({{pt({0, 0})}, {pt({1, 0})}}));

  const auto inside = convex_hulls_intersect(
      {{pt({0, 0}), pt({4, 0}), pt({0, 4})}, {pt({1, 1})}});
  ASSERT_TRUE(inside.has_value());
  EXPECT_EQ(*inside, pt({1, 1}));
}

TEST(ConvexHullsIntersect, Errors) {
  EXPECT_THROW(convex_hulls_intersect({}), std::invalid_argument);
  EXPECT_THROW(convex_hulls_intersect({{pt({0, 0})}, {}}),
               std::invalid_argument);
  EXPECT_THROW(convex_hulls_intersect({{pt({0, 0})}, {pt({1})}}),
               std::invalid_argument);
}

TEST(ConvexHullsIntersect, WitnessSupportWithinKirchbergerBound) {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> coord(0, 6);
  std::uniform_int_distribution<int> part_size(1, 4);
  for (int iter = 0; iter < 150; ++iter) {
    const int d = 1 + iter % 2;
    const int r = 2 + iter % 2;
    std::vector<std::vector<Point>> parts;
    for (int i = 0; i < r; ++i) {
      std::vector<Point> part;
      const int sz = part_size(rng);
      for (int j = 0; j < sz; ++j) {
        Point p(d);
        for (auto& c : p) c = coord(rng);
        part.push_back(std::move(p));
      }
      parts.push_back(std::move(part));
    }
    const auto detail = convex_hulls_intersect_detail(parts);
    if (!detail) continue;
    // Weights reconstruct the witness exactly in every part.
    int support = 0;
    for (int i = 0; i < r; ++i) {
      Rational sum(0);
      Point bary(d, Rational(0));
      for (std::size_t j = 0; j < parts[i].size(); ++j) {
        const Rational& w = detail->weights[i][j];
        EXPECT_GE(w, 0);
        if (w != 0) ++support;
        sum += w;
        for (int c = 0; c < d; ++c) bary[c] += w * parts[i][j][c];
      }
      EXPECT_EQ(sum, 1);
      EXPECT_EQ(bary, detail->witness);
      EXPECT_TRUE(testing::oracle_in_hull(detail->witness, parts[i]));
    }
    EXPECT_LE(support, (d + 1) * (r - 1) + 1);
  }
}

TEST(ConvexHullsIntersect, AgreesWithSmallSubTuples) {
  // Multipartite Kirchberger: the hulls intersect iff some sub-tuple with at
  // most (d+1)(r-1)+1 points in total has intersecting hulls.
  std::mt19937 rng(6021);
  std::uniform_int_distribution<int> coord(0, 4);
  std::uniform_int_distribution<int> part_size(1, 3);
  for (int iter = 0; iter < 60; ++iter) {
    const int d = 1 + iter % 2;
    const int r = 2 + iter % 2;
    std::vector<std::vector<Point>> parts;
    int total = 0;
    for (int i = 0; i < r; ++i) {
      std::vector<Point> part;
      const int sz = part_size(rng);
      total += sz;
      for (int j = 0; j < sz; ++j) {
        Point p(d);
        for (auto& c : p) c = coord(rng);
        part.push_back(std::move(p));
      }
      parts.push_back(std::move(part));
    }
    if (total > 8) continue;
    const bool full = convex_hulls_intersect(parts).has_value();
    // Enumerate sub-tuples (nonempty subsets per part) within the budget.
    bool small = false;
    const int budget = (d + 1) * (r - 1) + 1;
    std::vector<std::vector<Point>> chosen(r);
    std::function<void(int)> rec = [&](int i) {
      if (small) return;
      if (i == r) {
        int count = 0;
        for (const auto& part : chosen) count += part.size();
        if (count > budget) return;
        if (convex_hulls_intersect(chosen)) small = true;
        return;
      }
      const int sz = static_cast<int>(parts[i].size());
      for (int mask = 1; mask < (1 << sz); ++mask) {
        chosen[i].clear();
        for (int j = 0; j < sz; ++j) {
          if (mask & (1 << j)) chosen[i].push_back(parts[i][j]);
        }
        rec(i + 1);
        if (small) return;
      }
    };
    rec(0);
    EXPECT_EQ(full, small) << "iter " << iter;
  }
}

TEST(AffineIntersection, Examples) {
  // Containment on a line.
  const auto on_line = affine_intersection({{pt({0}), pt({2})}, {pt({1})}});
  EXPECT_EQ(on_line.dim(), 0);
  EXPECT_EQ(on_line.basepoint, pt({1}));

  // Parallel lines.
  const auto parallel = affine_intersection(
      {{pt({0, 0}), pt({1, 0})}, {pt({0, 1}), pt({1, 1})}});
  EXPECT_TRUE(parallel.empty);
  EXPECT_EQ(parallel.dim(), -1);

  // Crossing diagonals.
  const auto cross = affine_intersection(
      {{pt({0, 0}), pt({2, 2})}, {pt({0, 2}), pt({2, 0})}});
  EXPECT_EQ(cross.dim(), 0);
  EXPECT_EQ(cross.basepoint, pt({1, 1}));

  // A single part spanning the plane: the whole space comes back.
  const auto whole =
      affine_intersection({{pt({0, 0}), pt({1, 0}), pt({0, 1})}});
  EXPECT_EQ(whole.dim(), 2);
}

TEST(InGeneralPosition, DetectsDegeneracies) {
  PointSequence collinear{2, {pt({0, 0}), pt({1, 0}), pt({2, 0})}};
  EXPECT_FALSE(in_general_position(collinear));

  PointSequence parabola{2, {pt({1, 1}), pt({2, 4}), pt({3, 9})}};
  EXPECT_TRUE(in_general_position(parabola));

  PointSequence line{1, {pt({0}), pt({7}), pt({3})}};
  EXPECT_TRUE(in_general_position(line));

  PointSequence dup{2, {pt({1, 1}), pt({1, 1})}};
  EXPECT_FALSE(in_general_position(dup));
}

TEST(InStrongGeneralPosition, LinePointsAlwaysPass) {
  PointSequence line{1, {pt({0}), pt({1}), pt({2})}};
  EXPECT_TRUE(in_strong_general_position(line));

  PointSequence more{1, {pt({0}), pt({1}), pt({5}), pt({11}), pt({12})}};
  EXPECT_TRUE(in_strong_general_position(more));
}

TEST(InStrongGeneralPosition, UnitSquareFails) {
  // The two horizontal edges are parallel: a 2+2 split with
  // m = 4 = (d+1)(r-1)+1 must meet in a single point but does not.
  PointSequence square{2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}};
  ASSERT_TRUE(in_general_position(square));
  EXPECT_FALSE(in_strong_general_position(square));
}

TEST(InStrongGeneralPosition, ConsecutiveMomentParametersFail) {
  // t = 1,2,3,4 on the parabola: secants through {1,4} and {2,3} share the
  // slope 5, so they are parallel and the single-point case fails.
  PointSequence seq{2, {pt({1, 1}), pt({2, 4}), pt({3, 9}), pt({4, 16})}};
  ASSERT_TRUE(in_general_position(seq));
  EXPECT_FALSE(in_strong_general_position(seq));

  // Geometric parameters avoid equal pair sums.
  const auto geometric = moment_curve(4, 2, Rational(2));
  EXPECT_TRUE(in_strong_general_position(geometric));

  // Re-assert the dimension criterion directly on every family of disjoint
  // nonempty subsets of size <= d within the point budget.
  const int d = 2;
  const int n = static_cast<int>(geometric.size());
  std::vector<int> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = i;
  for (int r = 2; r <= n; ++r) {
    const int budget = (d + 1) * (r - 1) + 1;
    std::vector<int> support;
    for (int m = r; m <= std::min({budget, n, r * d}); ++m) {
      testing::oracle_for_each_combination(
          elems, m, [&](const std::vector<int>& pick) {
            testing::oracle_for_each_set_partition(
                pick, r, [&](const std::vector<std::vector<int>>& blocks) {
                  for (const auto& block : blocks) {
                    if (static_cast<int>(block.size()) > d) return;
                  }
                  std::vector<std::vector<Point>> parts;
                  for (const auto& block : blocks) {
                    std::vector<Point> part;
                    for (int i : block) part.push_back(geometric.points[i]);
                    parts.push_back(std::move(part));
                  }
                  const AffineFlat flat = affine_intersection(parts);
                  if (m == budget) {
                    EXPECT_EQ(flat.dim(), 0);
                  } else {
                    EXPECT_TRUE(flat.empty);
                  }
                });
            return true;
          });
    }
  }
}

TEST(InStrongGeneralPosition, RequiresGeneralPosition) {
  PointSequence collinear{2, {pt({0, 0}), pt({1, 0}), pt({2, 0})}};
  EXPECT_THROW(in_strong_general_position(collinear), std::invalid_argument);
}

TEST(MomentCurve, FormulaAndValidation) {
  const auto line = moment_curve(3, 1, Rational(2));
  EXPECT_EQ(line.points,
            (std::vector<Point>{pt({2}), pt({4}), pt({8})}));

  const auto plane = moment_curve(2, 2, Rational(2));
  EXPECT_EQ(plane.points, (std::vector<Point>{pt({2, 4}), pt({4, 16})}));

  EXPECT_THROW(moment_curve(0, 1, Rational(2)), std::invalid_argument);
  EXPECT_THROW(moment_curve(3, 0, Rational(2)), std::invalid_argument);
  EXPECT_THROW(moment_curve(3, 1, Rational(1)), std::invalid_argument);

  for (int d = 1; d <= 2; ++d) {
    for (int base = 2; base <= 3; ++base) {
      EXPECT_TRUE(in_general_position(moment_curve(9, d, Rational(base))));
    }
  }
}

TEST(PointIo, RoundTripsAndHeaders) {
  const auto seq = moment_curve(3, 1, Rational(2));
  EXPECT_EQ(format_points(seq), "dim 1\n2/1\n4/1\n8/1\n");
  EXPECT_EQ(parse_points(format_points(seq)), seq);

  const auto parsed = parse_points("# comment\ndim 2\n1/2 3\n-1 2/4\n");
  EXPECT_EQ(parsed.dim, 2);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed.points[0], (Point{Rational(1, 2), Rational(3)}));
  EXPECT_EQ(parsed.points[1], (Point{Rational(-1), Rational(1, 2)}));

  EXPECT_THROW(parse_points(""), std::runtime_error);
  EXPECT_THROW(parse_points("dim 2\n1\n"), std::runtime_error);
  EXPECT_THROW(parse_points("dim 0\n"), std::runtime_error);
  EXPECT_THROW(parse_points("dim 1\n1/0\n"), std::runtime_error);

  std::istringstream parts_text(
      "dim 2\npart\n0 0\n2 2\npart\n0 2\n2 0\n");
  int dim = 0;
  const auto parts = read_point_parts(parts_text, &dim);
  EXPECT_EQ(dim, 2);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].size(), 2u);
  EXPECT_EQ(format_point(pt({1, 1})), "1/1 1/1");
}

}  // namespace
}  // namespace tvw
