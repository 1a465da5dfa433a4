#pragma once

#include <vector>

#include "tverberg/algos.hpp"
#include "tverberg/core.hpp"

namespace tverberg {

/**
 * A flat meeting the convex hull of every part of a partition.
 * `partition` carries the parts with their witnesses; its center is the
 * flat's origin. intersection_points[i] = sum of part i's witness.
 */
struct TverbergFlatCertificate {
  Flat flat;
  TverbergCertificate partition;
  std::vector<Point> intersection_points;
};

/**
 * Lifts a pruned certificate of the projection of `points` onto the k-flat
 * `h` (center in h's intrinsic coordinates) to the (d-k)-flat through the
 * lifted center orthogonal to h. Same parts, same depth.
 */
TverbergFlatCertificate lift_through_flat(const PointSet& points, const Flat& h, const TverbergCertificate& proj_cert,
                                          Exec exec = Exec::parallel);

/**
 * Solves the first `delta` coordinates with `inner`, lifts to the orthogonal
 * flat, recurses on the intersection points inside it, and substitutes each
 * intersection point by its part. Depth >= ceil(n / rho^ceil(d/delta)).
 */
TverbergCertificate split_dimension_tverberg(const PointSet& points, std::size_t delta, const Solver& inner,
                                             Exec exec = Exec::parallel);

/**
 * Splits into two half-dimension problems solved by this same algorithm,
 * collects certificates with that solver and merges their centers with
 * Radon doubling. Depth >= ceil(n / 4(d+1)^3).
 */
TverbergCertificate bootstrap_tverberg(const PointSet& points);

/// The bootstrap as a Solver (rho = 4(d+1)^3).
Solver bootstrap_solver(std::size_t dimension);

}  // namespace tverberg
