#pragma once

#include <optional>
#include <vector>

#include "tverword/rational.hpp"

namespace tvw {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row major

// Rank by exact Gaussian elimination.
int matrix_rank(Matrix m);

struct LinearSolution {
  Vector particular;
  // Basis of the solution space of the homogeneous system; the vectors are
  // linearly independent.
  std::vector<Vector> nullspace;
};

// Solves a x = b exactly over num_vars unknowns; nullopt when inconsistent.
// With zero rows the solution space is all of Q^num_vars.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& b,
                                           int num_vars);

struct AffineEquations {
  Matrix coeffs;  // rows a with a . x = rhs
  Vector rhs;
};

// Equations cutting out the affine hull of the given points: the nullspace
// of the system (a, beta) with a . p = beta for every point p.
AffineEquations affine_hull_equations(const std::vector<Vector>& points,
                                      int dim);

}  // namespace tvw
