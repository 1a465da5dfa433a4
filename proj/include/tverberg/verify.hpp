#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tverberg/core.hpp"
#include "tverberg/kernels.hpp"

namespace tverberg {

struct CheckResult {
  char label;          ///< 'a'..'e'
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool valid() const;
  const CheckResult& check(char label) const;
};

/**
 * Witness-based validation of a certificate against its point set:
 *  (a) parts are disjoint and reference ids of `points`
 *  (b) each part's weights are >= -tol and sum to 1 within tol
 *  (c) each part reproduces the center within tol * points.scale()
 *  (d) pruned certificates have parts of at most d+1 ids
 *  (e) the depth field equals the number of parts
 * Failures are reported, never thrown.
 */
ValidationReport verify_certificate(const PointSet& points, const TverbergCertificate& cert,
                                    double tol = kVerifyTol, Exec exec = Exec::parallel);

/// Witness (indices into `points`, support <= d+1) for x in conv(points), if any.
std::optional<Witness> hull_membership_witness(std::span<const Point> points, std::span<const double> x);

/// x in conv(points) within kGeomTol * scale, decided by linear feasibility.
bool hull_membership(std::span<const Point> points, std::span<const double> x);

}  // namespace tverberg
