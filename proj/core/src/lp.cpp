#include "tverword/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace tvw {

std::optional<Vector> lp_feasible(const LinearSystem& system) {
  if (system.num_vars < 0) {
    throw std::invalid_argument("lp_feasible: negative variable count");
  }
  if (system.coeffs.size() != system.rhs.size()) {
    throw std::invalid_argument("lp_feasible: row count mismatch");
  }
  const std::size_t n = static_cast<std::size_t>(system.num_vars);
  const std::size_t m = system.coeffs.size();
  for (const auto& row : system.coeffs) {
    if (row.size() != n) {
      throw std::invalid_argument("lp_feasible: ragged system");
    }
  }

  // Phase-1 tableau: minimize the sum of one artificial per row. Columns
  // 0..n-1 are the original variables, n..n+m-1 the artificials, last the
  // right-hand side.
  const std::size_t cols = n + m + 1;
  Matrix t(m, Vector(cols, Rational(0)));
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = system.rhs[r] < 0;
    for (std::size_t c = 0; c < n; ++c) {
      t[r][c] = flip ? -system.coeffs[r][c] : system.coeffs[r][c];
    }
    t[r][n + r] = 1;
    t[r][cols - 1] = flip ? -system.rhs[r] : system.rhs[r];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  // Reduced-cost row for the artificial objective; artificials start basic,
  // so their reduced costs are zero and the others are column-sum negations.
  Vector z(cols, Rational(0));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < m; ++r) z[c] -= t[r][c];
  }
  for (std::size_t r = 0; r < m; ++r) z[cols - 1] -= t[r][cols - 1];

  while (true) {
    // Bland's rule: smallest-index entering column with negative reduced
    // cost; smallest basic variable among the tied minimum ratios.
    std::size_t enter = cols;
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      if (z[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best_ratio(0);
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      const Rational ratio = t[r][cols - 1] / t[r][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      // The phase-1 objective is bounded below by zero, so this cannot
      // happen for well-formed tableaus.
      throw std::logic_error("lp_feasible: unbounded phase-1 objective");
    }

    const Rational pivot = t[leave][enter];
    for (std::size_t c = 0; c < cols; ++c) t[leave][c] /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational factor = t[r][enter];
      for (std::size_t c = 0; c < cols; ++c) {
        t[r][c] -= factor * t[leave][c];
      }
    }
    if (z[enter] != 0) {
      const Rational factor = z[enter];
      for (std::size_t c = 0; c < cols; ++c) {
        z[c] -= factor * t[leave][c];
      }
    }
    basis[leave] = enter;
  }

  // Optimal value is -z[rhs]; nonzero means some artificial is stuck > 0.
  if (z[cols - 1] != 0) return std::nullopt;

  Vector x(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) x[basis[r]] = t[r][cols - 1];
  }
  return x;
}

}  // namespace tvw
