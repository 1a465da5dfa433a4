#pragma once

// Per-part data-parallel kernels. Every kernel has an OpenMP path and a
// serial reference path; the two produce bit-identical results because parts
// are processed independently.

#include <vector>

#include "tverberg/core.hpp"

namespace tverberg {

enum class Exec { serial, parallel };

/// Parts with fewer entries than this run serially even under Exec::parallel.
inline constexpr std::size_t kParallelGrain = 512;

/// Row-major r x d matrix of the points sum_p w_p p, one row per part.
std::vector<double> part_points(const PointSet& points, const TverbergCertificate& cert,
                                Exec exec = Exec::parallel);

/// Prunes every part against cert.center and marks the certificate pruned.
void prune_parts(TverbergCertificate& cert, const PointSet& points, Exec exec = Exec::parallel);

/// Max-norm residual ||sum_p w_p p - center|| for every part.
std::vector<double> part_residuals(const PointSet& points, const TverbergCertificate& cert,
                                   Exec exec = Exec::parallel);

}  // namespace tverberg
