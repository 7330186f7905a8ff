#pragma once

#include <optional>

#include "tverword/linalg.hpp"

namespace tvw {

// System of linear equalities coeffs . x = rhs over variables constrained
// to x >= 0.
struct LinearSystem {
  int num_vars = 0;
  Matrix coeffs;
  Vector rhs;
};

// Exact feasibility of the system: returns an assignment with all variables
// >= 0 satisfying every equality, or nullopt. Phase-1 simplex over rationals
// with Bland's smallest-index pivot rule, so the search terminates and the
// returned assignment is deterministic (it is a basic feasible solution, so
// at most rank-many variables are nonzero). Throws on malformed systems.
std::optional<Vector> lp_feasible(const LinearSystem& system);

}  // namespace tvw
