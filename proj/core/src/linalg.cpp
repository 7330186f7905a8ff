#include "tverword/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace tvw {

namespace {

// Reduced row echelon form in place; returns the pivot column per pivot row.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivot_cols;
  if (m.empty()) return pivot_cols;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t pr = pivot_row;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pivot_row], m[pr]);
    const Rational inv = m[pivot_row][c];
    for (std::size_t j = c; j < cols; ++j) m[pivot_row][j] /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c] == 0) continue;
      const Rational factor = m[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[r][j] -= factor * m[pivot_row][j];
      }
    }
    pivot_cols.push_back(static_cast<int>(c));
    ++pivot_row;
  }
  return pivot_cols;
}

}  // namespace

int matrix_rank(Matrix m) {
  return static_cast<int>(rref(m).size());
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& b,
                                           int num_vars) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("solve_linear: row count mismatch");
  }
  if (num_vars < 0) {
    throw std::invalid_argument("solve_linear: negative variable count");
  }
  const std::size_t cols = static_cast<std::size_t>(num_vars);
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw std::invalid_argument("solve_linear: ragged matrix");
    }
  }
  if (a.empty()) {
    LinearSolution sol;
    sol.particular.assign(cols, Rational(0));
    for (std::size_t c = 0; c < cols; ++c) {
      Vector dir(cols, Rational(0));
      dir[c] = 1;
      sol.nullspace.push_back(std::move(dir));
    }
    return sol;
  }

  Matrix aug = a;
  for (std::size_t r = 0; r < a.size(); ++r) aug[r].push_back(b[r]);
  const std::vector<int> pivots = rref(aug);
  // Inconsistent iff some pivot lands in the augmented column.
  for (int c : pivots) {
    if (c == static_cast<int>(cols)) return std::nullopt;
  }

  LinearSolution sol;
  sol.particular.assign(cols, Rational(0));
  std::vector<int> pivot_col_of_row(pivots.begin(), pivots.end());
  std::vector<char> is_pivot_col(cols, 0);
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
    const int c = pivot_col_of_row[r];
    is_pivot_col[c] = 1;
    sol.particular[c] = aug[r].back();
  }
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    Vector dir(cols, Rational(0));
    dir[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      dir[pivot_col_of_row[r]] = -aug[r][free_col];
    }
    sol.nullspace.push_back(std::move(dir));
  }
  return sol;
}

AffineEquations affine_hull_equations(const std::vector<Vector>& points,
                                      int dim) {
  if (points.empty()) {
    throw std::invalid_argument("affine hull of an empty point set");
  }
  // Functionals (a, beta) with a . p = beta for every p: nullspace of the
  // system with rows [p | -1].
  Matrix m;
  m.reserve(points.size());
  for (const Vector& p : points) {
    if (static_cast<int>(p.size()) != dim) {
      throw std::invalid_argument("point dimension mismatch");
    }
    Vector row = p;
    row.push_back(Rational(-1));
    m.push_back(std::move(row));
  }
  const auto sol = solve_linear(m, Vector(points.size(), Rational(0)),
                                dim + 1);
  AffineEquations eq;
  for (const Vector& u : sol->nullspace) {
    Vector a(u.begin(), u.end() - 1);
    eq.coeffs.push_back(std::move(a));
    eq.rhs.push_back(u.back());
  }
  return eq;
}

}  // namespace tvw
