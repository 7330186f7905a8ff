#include "tverword/geometry.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "enumeration.hpp"
#include "tverword/lp.hpp"

namespace tvw {

namespace {

int common_dimension(const std::vector<std::vector<Point>>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("empty part list");
  }
  int dim = -1;
  for (const auto& part : parts) {
    if (part.empty()) {
      throw std::invalid_argument("empty part");
    }
    for (const Point& p : part) {
      if (dim < 0) dim = static_cast<int>(p.size());
      if (static_cast<int>(p.size()) != dim) {
        throw std::invalid_argument("point dimension mismatch");
      }
    }
  }
  return dim;
}

void check_sequence(const PointSequence& sequence) {
  for (const Point& p : sequence.points) {
    if (static_cast<int>(p.size()) != sequence.dim) {
      throw std::invalid_argument("point dimension mismatch");
    }
  }
}

}  // namespace

std::optional<HullIntersection> convex_hulls_intersect_detail(
    const std::vector<std::vector<Point>>& parts) {
  const int dim = common_dimension(parts);
  const int r = static_cast<int>(parts.size());
  std::vector<int> offset(r, 0);
  int total = 0;
  for (int i = 0; i < r; ++i) {
    offset[i] = total;
    total += static_cast<int>(parts[i].size());
  }

  // Convex weights per point; one unit-sum row per part and, per coordinate,
  // the barycenter of every later part equalized with part 0.
  LinearSystem sys;
  sys.num_vars = total;
  for (int i = 0; i < r; ++i) {
    Vector row(total, Rational(0));
    for (std::size_t j = 0; j < parts[i].size(); ++j) {
      row[offset[i] + j] = 1;
    }
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(Rational(1));
  }
  for (int i = 1; i < r; ++i) {
    for (int c = 0; c < dim; ++c) {
      Vector row(total, Rational(0));
      for (std::size_t j = 0; j < parts[i].size(); ++j) {
        row[offset[i] + j] = parts[i][j][c];
      }
      for (std::size_t j = 0; j < parts[0].size(); ++j) {
        row[offset[0] + j] = -parts[0][j][c];
      }
      sys.coeffs.push_back(std::move(row));
      sys.rhs.push_back(Rational(0));
    }
  }

  const auto solution = lp_feasible(sys);
  if (!solution) return std::nullopt;

  HullIntersection result;
  result.witness.assign(dim, Rational(0));
  for (std::size_t j = 0; j < parts[0].size(); ++j) {
    for (int c = 0; c < dim; ++c) {
      result.witness[c] += (*solution)[j] * parts[0][j][c];
    }
  }
  for (int i = 0; i < r; ++i) {
    result.weights.emplace_back(solution->begin() + offset[i],
                                solution->begin() + offset[i] +
                                    parts[i].size());
  }
  return result;
}

std::optional<Point> convex_hulls_intersect(
    const std::vector<std::vector<Point>>& parts) {
  auto detail = convex_hulls_intersect_detail(parts);
  if (!detail) return std::nullopt;
  return std::move(detail->witness);
}

AffineFlat affine_intersection(const std::vector<std::vector<Point>>& parts) {
  const int dim = common_dimension(parts);
  Matrix coeffs;
  Vector rhs;
  for (const auto& part : parts) {
    AffineEquations eq = affine_hull_equations(part, dim);
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) {
      coeffs.push_back(std::move(eq.coeffs[i]));
      rhs.push_back(eq.rhs[i]);
    }
  }
  const auto sol = solve_linear(coeffs, rhs, dim);
  if (!sol) return AffineFlat{};
  return AffineFlat{false, sol->particular, sol->nullspace};
}

bool in_general_position(const PointSequence& sequence) {
  check_sequence(sequence);
  const int n = static_cast<int>(sequence.size());
  const int d = sequence.dim;
  bool ok = true;
  for (int k = 2; k <= std::min(d + 1, n) && ok; ++k) {
    detail::for_each_subset(n, k, [&](const std::vector<int>& pick) {
      Matrix diff;
      for (int j = 1; j < k; ++j) {
        Vector row(d);
        for (int c = 0; c < d; ++c) {
          row[c] = sequence.points[pick[j]][c] -
                   sequence.points[pick[0]][c];
        }
        diff.push_back(std::move(row));
      }
      if (matrix_rank(std::move(diff)) != k - 1) {
        ok = false;
        return false;
      }
      return true;
    });
  }
  return ok;
}

bool in_strong_general_position(const PointSequence& sequence) {
  if (!in_general_position(sequence)) {
    throw std::invalid_argument(
        "in_strong_general_position requires general position");
  }
  const int n = static_cast<int>(sequence.size());
  const int d = sequence.dim;
  bool ok = true;
  for (int r = 2; r <= n && ok; ++r) {
    const int budget = (d + 1) * (r - 1) + 1;
    const int max_total = std::min({budget, n, r * d});
    for (int m = r; m <= max_total && ok; ++m) {
      detail::for_each_subset(n, m, [&](const std::vector<int>& pick) {
        return detail::for_each_set_partition(
            pick, r, d, [&](const std::vector<std::vector<int>>& blocks) {
              std::vector<std::vector<Point>> parts;
              parts.reserve(blocks.size());
              for (const auto& block : blocks) {
                std::vector<Point> part;
                for (int i : block) part.push_back(sequence.points[i]);
                parts.push_back(std::move(part));
              }
              const AffineFlat flat = affine_intersection(parts);
              const bool good =
                  m == budget ? flat.dim() == 0 : flat.empty;
              if (!good) {
                ok = false;
                return false;
              }
              return true;
            });
      });
    }
  }
  return ok;
}

PointSequence moment_curve(int n, int d, const Rational& base) {
  if (n < 1 || d < 1) {
    throw std::invalid_argument("moment_curve needs n >= 1 and d >= 1");
  }
  if (base <= 1) {
    throw std::invalid_argument("moment_curve needs base > 1");
  }
  PointSequence seq;
  seq.dim = d;
  Rational t(1);
  for (int i = 1; i <= n; ++i) {
    t *= base;
    Point p;
    p.reserve(d);
    Rational coord(1);
    for (int c = 0; c < d; ++c) {
      coord *= t;
      p.push_back(coord);
    }
    seq.points.push_back(std::move(p));
  }
  return seq;
}

namespace {

// Lines of interest: non-blank, non-comment.
bool next_data_line(std::istream& in, std::string* line) {
  while (std::getline(in, *line)) {
    std::istringstream probe(*line);
    std::string first;
    if (!(probe >> first)) continue;
    if (first.front() == '#') continue;
    return true;
  }
  return false;
}

Point parse_point_line(const std::string& line, int dim) {
  std::istringstream ls(line);
  std::string token;
  Point p;
  while (ls >> token) {
    if (token.front() == '#') break;
    p.push_back(parse_rational(token));
  }
  if (dim >= 0 && static_cast<int>(p.size()) != dim) {
    throw std::runtime_error("point with wrong coordinate count: '" + line +
                             "'");
  }
  return p;
}

int parse_dim_header(const std::string& line) {
  std::istringstream ls(line);
  std::string word;
  int d = 0;
  if (!(ls >> word >> d) || word != "dim" || d < 1) {
    throw std::runtime_error("expected 'dim d' header, got '" + line + "'");
  }
  std::string extra;
  if (ls >> extra && extra.front() != '#') {
    throw std::runtime_error("trailing tokens after dim header");
  }
  return d;
}

}  // namespace

PointSequence read_points(std::istream& in) {
  std::string line;
  if (!next_data_line(in, &line)) {
    throw std::runtime_error("missing 'dim d' header");
  }
  PointSequence seq;
  seq.dim = parse_dim_header(line);
  while (next_data_line(in, &line)) {
    seq.points.push_back(parse_point_line(line, seq.dim));
  }
  return seq;
}

PointSequence parse_points(const std::string& text) {
  std::istringstream in(text);
  return read_points(in);
}

std::string format_point(const Point& point) {
  std::string out;
  for (std::size_t c = 0; c < point.size(); ++c) {
    if (c) out += ' ';
    out += format_rational(point[c]);
  }
  return out;
}

std::string format_points(const PointSequence& sequence) {
  std::string out = "dim " + std::to_string(sequence.dim) + "\n";
  for (const Point& p : sequence.points) {
    out += format_point(p);
    out += '\n';
  }
  return out;
}

std::vector<std::vector<Point>> read_point_parts(std::istream& in, int* dim) {
  std::string line;
  if (!next_data_line(in, &line)) {
    throw std::runtime_error("missing 'dim d' header");
  }
  const int d = parse_dim_header(line);
  if (dim != nullptr) *dim = d;
  std::vector<std::vector<Point>> parts;
  bool in_part = false;
  while (next_data_line(in, &line)) {
    std::istringstream probe(line);
    std::string first;
    probe >> first;
    if (first == "part") {
      parts.emplace_back();
      in_part = true;
      continue;
    }
    if (!in_part) {
      throw std::runtime_error("point before first 'part' line");
    }
    parts.back().push_back(parse_point_line(line, d));
  }
  return parts;
}

}  // namespace tvw
