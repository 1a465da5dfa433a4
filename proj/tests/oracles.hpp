#pragma once

// Independent checks used by the unit tests and the acceptance runner. They
// recompute everything from the raw coordinates and share no code with the
// library's verifier.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tverberg/core.hpp"

namespace oracle {

/// Empty when the certificate is a valid Tverberg certificate of `p`.
inline std::string certificate_problem(const tverberg::PointSet& p, const tverberg::TverbergCertificate& c,
                                       double tol = 1e-8) {
  const std::size_t d = p.dimension();
  std::ostringstream why;
  if (c.center.size() != d) return "center dimension " + std::to_string(c.center.size());
  if (c.offsets.empty() || c.offsets.back() != c.ids.size() || c.ids.size() != c.weights.size()) return "layout";
  if (c.depth != c.part_count() || c.depth == 0) return "depth field disagrees with part count";
  std::set<tverberg::PointId> seen;
  double scale = 0.0;
  for (double v : p.coords()) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  for (std::size_t i = 0; i < c.part_count(); ++i) {
    auto part = c.part(i);
    if (part.size() == 0) return "empty part";
    if (c.pruned && part.size() > d + 1) return "pruned part with " + std::to_string(part.size()) + " ids";
    double sum = 0.0;
    std::vector<double> acc(d, 0.0);
    for (std::size_t j = 0; j < part.size(); ++j) {
      const auto id = part.ids[j];
      if (id >= p.size()) return "id out of range";
      if (!seen.insert(id).second) return "id " + std::to_string(id) + " repeated";
      if (part.weights[j] < -tol) return "negative weight";
      sum += part.weights[j];
      for (std::size_t k = 0; k < d; ++k) acc[k] += part.weights[j] * p[id][k];
    }
    if (std::abs(sum - 1.0) > tol) {
      why << "part " << i << " weights sum to " << sum;
      return why.str();
    }
    for (std::size_t k = 0; k < d; ++k)
      if (std::abs(acc[k] - c.center[k]) > tol * scale) {
        why << "part " << i << " misses the center by " << std::abs(acc[k] - c.center[k]);
        return why.str();
      }
  }
  return {};
}

/// Barycentric coordinates of c over affinely independent points via the
/// normal equations of [p; 1] lambda = [c; 1]; false if degenerate or outside.
inline bool barycentric_ok(const tverberg::PointSet& pts, const std::vector<tverberg::PointId>& ids,
                           std::span<const double> c, double tol) {
  const std::size_t d = pts.dimension();
  const std::size_t k = ids.size();
  const std::size_t rows = d + 1;
  std::vector<double> a(rows * k), b(rows);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i * k + j] = pts[ids[j]][i];
    a[d * k + j] = 1.0;
  }
  for (std::size_t i = 0; i < d; ++i) b[i] = c[i];
  b[d] = 1.0;
  std::vector<double> m(k * (k + 1), 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t i = 0; i < rows; ++i) m[r * (k + 1) + s] += a[i * k + r] * a[i * k + s];
    for (std::size_t i = 0; i < rows; ++i) m[r * (k + 1) + k] += a[i * k + r] * b[i];
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(m[r * (k + 1) + col]) > std::abs(m[piv * (k + 1) + col])) piv = r;
    if (std::abs(m[piv * (k + 1) + col]) < 1e-13) return false;
    for (std::size_t s = 0; s <= k; ++s) std::swap(m[col * (k + 1) + s], m[piv * (k + 1) + s]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = m[r * (k + 1) + col] / m[col * (k + 1) + col];
      for (std::size_t s = col; s <= k; ++s) m[r * (k + 1) + s] -= f * m[col * (k + 1) + s];
    }
  }
  std::vector<double> lambda(k);
  for (std::size_t j = 0; j < k; ++j) lambda[j] = m[j * (k + 1) + k] / m[j * (k + 1) + j];
  for (double l : lambda)
    if (l < -tol) return false;
  for (std::size_t i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < k; ++j) acc += a[i * k + j] * lambda[j];
    if (std::abs(acc - b[i]) > tol) return false;
  }
  return true;
}

/// c in conv(ids), decided by trying every subset (Caratheodory).
inline bool in_hull_of(const tverberg::PointSet& pts, const std::vector<tverberg::PointId>& ids,
                       std::span<const double> c, double tol) {
  const std::size_t k = ids.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<tverberg::PointId> sub;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) sub.push_back(ids[j]);
    if (barycentric_ok(pts, sub, c, tol)) return true;
  }
  return false;
}

/// All subsets of `ids` with at most `max_size` elements whose hull holds c.
inline std::vector<std::vector<tverberg::PointId>> hull_subsets(const tverberg::PointSet& pts,
                                                                const std::vector<tverberg::PointId>& ids,
                                                                std::span<const double> c, std::size_t max_size,
                                                                double tol) {
  std::vector<std::vector<tverberg::PointId>> out;
  const std::size_t k = ids.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<tverberg::PointId> sub;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) sub.push_back(ids[j]);
    if (sub.size() <= max_size && in_hull_of(pts, sub, c, tol)) out.push_back(sub);
  }
  return out;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace oracle
