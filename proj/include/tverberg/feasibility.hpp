#pragma once

#include <span>
#include <vector>

namespace tverberg {

struct FeasibilityResult {
  bool feasible = false;
  std::vector<double> x;         ///< a basic solution, valid when feasible
  double infeasibility = 0.0;    ///< optimal phase-1 objective (sum of artificials)
};

/**
 * Phase-1 simplex for { x >= 0 : A x = b } with A dense row-major
 * (rows x cols). Bland's rule keeps it cycle-free; meant for the small dense
 * systems of the brute-force search and hull-membership tests.
 */
FeasibilityResult find_feasible_point(std::span<const double> a, std::size_t rows, std::size_t cols,
                                      std::span<const double> b, double tol = 1e-10);

}  // namespace tverberg
