#include "tverberg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tverberg/feasibility.hpp"

namespace tverberg {

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& ValidationReport::check(char label) const {
  for (const auto& c : checks)
    if (c.label == label) return c;
  throw Error(ErrorCode::Internal, std::string("no check labelled ") + label);
}

ValidationReport verify_certificate(const PointSet& points, const TverbergCertificate& cert, double tol,
                                    Exec exec) {
  ValidationReport report;
  const std::size_t n = points.size();
  const std::size_t d = points.dimension();
  const std::size_t r = cert.part_count();

  bool layout_ok = !cert.offsets.empty() && cert.offsets.front() == 0 &&
                   cert.offsets.back() == cert.ids.size() && cert.ids.size() == cert.weights.size() &&
                   std::is_sorted(cert.offsets.begin(), cert.offsets.end());

  // (a)
  {
    std::ostringstream why;
    bool ok = layout_ok;
    if (!layout_ok) why << "malformed part layout";
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; ok && i < r; ++i) {
      auto part = cert.part(i);
      if (part.size() == 0) {
        ok = false;
        why << "part " << i << " is empty";
      }
      for (PointId id : part.ids) {
        if (id >= n) {
          ok = false;
          why << "part " << i << " references id " << id << " outside the point set";
          break;
        }
        if (seen[id]) {
          ok = false;
          why << "id " << id << " appears more than once (part " << i << ")";
          break;
        }
        seen[id] = 1;
      }
    }
    report.checks.push_back({'a', "disjoint parts within the point set", ok, why.str()});
  }

  // (b)
  {
    std::ostringstream why;
    bool ok = layout_ok;
    for (std::size_t i = 0; ok && i < r; ++i) {
      auto part = cert.part(i);
      double sum = 0.0;
      for (double w : part.weights) {
        if (!(w >= -tol)) {
          ok = false;
          why << "part " << i << " has weight " << w;
          break;
        }
        sum += w;
      }
      if (ok && !(std::abs(sum - 1.0) <= tol)) {
        ok = false;
        why << "part " << i << " weights sum to " << sum;
      }
    }
    report.checks.push_back({'b', "witness weights form convex combinations", ok, why.str()});
  }

  // (c)
  {
    std::ostringstream why;
    bool ok = report.checks[0].passed && cert.center.size() == d &&
              std::all_of(cert.center.begin(), cert.center.end(), [](double c) { return std::isfinite(c); });
    if (!report.checks[0].passed)
      why << "skipped: part structure invalid";
    else if (cert.center.size() != d)
      why << "center has dimension " << cert.center.size() << ", expected " << d;
    else if (!ok)
      why << "center is not finite";
    if (ok) {
      const auto residuals = part_residuals(points, cert, exec);
      const double bound = tol * points.scale();
      for (std::size_t i = 0; i < r; ++i) {
        if (!(residuals[i] <= bound)) {
          ok = false;
          why << "part " << i << " misses the center by " << residuals[i] << " (bound " << bound << ")";
          break;
        }
      }
    }
    report.checks.push_back({'c', "witnesses reproduce the center", ok, why.str()});
  }

  // (d)
  {
    std::ostringstream why;
    bool ok = layout_ok;
    if (ok && cert.pruned)
      for (std::size_t i = 0; i < r; ++i)
        if (cert.part(i).size() > d + 1) {
          ok = false;
          why << "part " << i << " has " << cert.part(i).size() << " ids but the certificate is pruned";
          break;
        }
    report.checks.push_back({'d', "pruned parts have at most d+1 ids", ok, why.str()});
  }

  // (e)
  {
    std::ostringstream why;
    const bool ok = cert.depth == r && r > 0;
    if (!ok) why << "depth " << cert.depth << " but " << r << " parts";
    report.checks.push_back({'e', "depth equals part count", ok, why.str()});
  }
  return report;
}

std::optional<Witness> hull_membership_witness(std::span<const Point> points, std::span<const double> x) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "hull of no points");
  const std::size_t d = x.size();
  const std::size_t m = points.size();
  double spread = 0.0;
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "hull point dimension");
    for (std::size_t k = 0; k < d; ++k) {
      spread = std::max(spread, std::abs(p[k] - x[k]));
      scale = std::max(scale, std::abs(p[k]));
    }
  }
  if (scale == 0.0) scale = 1.0;
  if (spread == 0.0) spread = 1.0;

  std::vector<double> a((d + 1) * m);
  std::vector<double> b(d + 1, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < d; ++k) a[k * m + j] = (points[j][k] - x[k]) / spread;
    a[d * m + j] = 1.0;
  }
  b[d] = 1.0;
  const auto res = find_feasible_point(a, d + 1, m, b, kGeomTol * scale / spread);
  if (!res.feasible) return std::nullopt;

  Witness w;
  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) sum += res.x[j];
  if (!(sum > 0.0)) return std::nullopt;
  for (std::size_t j = 0; j < m; ++j)
    if (res.x[j] > 0.0) {
      w.ids.push_back(j);
      w.weights.push_back(res.x[j] / sum);
    }
  double err = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) acc += w.weights[j] * points[w.ids[j]][k];
    err = std::max(err, std::abs(acc - x[k]));
  }
  if (err > kGeomTol * scale) return std::nullopt;
  return w;
}

bool hull_membership(std::span<const Point> points, std::span<const double> x) {
  return hull_membership_witness(points, x).has_value();
}

}  // namespace tverberg
