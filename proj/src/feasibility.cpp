#include "tverberg/feasibility.hpp"

#include <cmath>
#include <limits>

#include "tverberg/core.hpp"

namespace tverberg {

FeasibilityResult find_feasible_point(std::span<const double> a, std::size_t rows, std::size_t cols,
                                      std::span<const double> b, double tol) {
  if (a.size() != rows * cols || b.size() != rows)
    throw Error(ErrorCode::DimensionMismatch, "feasibility system shape");

  // Tableau columns: cols originals, rows artificials, then the rhs.
  const std::size_t width = cols + rows + 1;
  const std::size_t rhs = width - 1;
  std::vector<double> t(rows * width, 0.0);
  std::vector<double> obj(width, 0.0);
  std::vector<std::size_t> basis(rows);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return t[r * width + c]; };

  for (std::size_t r = 0; r < rows; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < cols; ++c) at(r, c) = sign * a[r * cols + c];
    at(r, cols + r) = 1.0;
    at(r, rhs) = sign * b[r];
    basis[r] = cols + r;
    for (std::size_t c = 0; c < cols; ++c) obj[c] -= at(r, c);
    obj[rhs] -= at(r, rhs);
  }

  constexpr double kPivotEps = 1e-11;
  const std::size_t max_iter = 200 * (rows + cols) + 1000;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    // Bland: lowest-index improving column; artificials never re-enter.
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (obj[c] < -kPivotEps) {
        enter = c;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = rows;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      const double coef = at(r, enter);
      if (coef <= kPivotEps) continue;
      const double ratio = at(r, rhs) / coef;
      if (ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 && leave < rows && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen in phase 1

    const double inv = 1.0 / at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) at(leave, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width; ++c) at(r, c) -= f * at(leave, c);
    }
    const double f = obj[enter];
    for (std::size_t c = 0; c < width; ++c) obj[c] -= f * at(leave, c);
    basis[leave] = enter;
  }

  FeasibilityResult result;
  result.x.assign(cols, 0.0);
  double infeasible = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < cols)
      result.x[basis[r]] = std::max(0.0, at(r, rhs));
    else
      infeasible += std::abs(at(r, rhs));
  }
  result.infeasibility = infeasible;
  result.feasible = infeasible <= tol;
  return result;
}

}  // namespace tverberg
