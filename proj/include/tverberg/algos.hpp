#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tverberg/core.hpp"
#include "tverberg/kernels.hpp"

namespace tverberg {

/// A Tverberg solver guaranteeing depth ceil(m / rho) on any m-point input.
struct Solver {
  std::function<TverbergCertificate(const PointSet&)> solve;
  double rho = 2.0;
};

/// Median of a 1-D set, paired rank j with rank n+1-j.
TverbergCertificate median_partition_1d(const PointSet& points);

/**
 * Lifts a pruned certificate of the projection of `points` onto the
 * hyperplane `h` (center given in h's intrinsic coordinates) to a
 * certificate of depth ceil(r/2) in the ambient space. Each part's witness
 * weights are reapplied to the unprojected points; the resulting points lie
 * on the line through the lifted center orthogonal to h, and are paired by
 * rank along it around their median. The output is not pruned.
 */
TverbergCertificate lift_partition(const PointSet& points, const Flat& h, const TverbergCertificate& proj_cert,
                                   Exec exec = Exec::parallel);

/// Depth >= ceil(n / 2^d) by projecting out the last coordinate, recursing,
/// lifting and pruning.
TverbergCertificate simple_tverberg(const PointSet& points, Exec exec = Exec::parallel);

Solver simple_solver(std::size_t dimension);

struct CollectParams {
  double beta = 2.0;
  double rho = 2.0;
  std::size_t target_depth = 1;  ///< ceil(n / (beta * rho))

  /// Throws ParamsOutOfRange unless 2 <= beta <= n / rho and rho >= 1.
  static CollectParams make(std::size_t n, double beta, double rho);
};

/// ceil(n (1 - 1/beta) / (target_depth (d+1))): the guaranteed number of collected certificates.
std::size_t collect_count_bound(std::size_t n, std::size_t d, const CollectParams& params);

struct CollectedCertificate {
  std::vector<PointId> ids;  ///< ground set of `cert`, ascending
  TverbergCertificate cert;
};

enum class CollectDepth {
  /// Every certificate is cut to params.target_depth parts.
  fixed,
  /// Certificates are cut to the smallest depth the solver actually
  /// returned (never below target_depth); earlier ones are re-cut and their
  /// dropped points returned to the pool whenever that minimum falls.
  adaptive,
};

/**
 * Repeatedly solves the ceil(n / beta) lowest unused ids with `inner` and
 * removes the ids its (truncated, pruned) certificate uses, until fewer than
 * n / beta ids remain.
 */
std::vector<CollectedCertificate> collect(const PointSet& points, const CollectParams& params, const Solver& inner,
                                          CollectDepth mode = CollectDepth::fixed);

/**
 * Given certificates over disjoint ground sets, each cut to the common depth
 * r, and an outer certificate of depth r' over their centers, builds the
 * depth r * r' certificate whose part (a, b) is the union of part b of every
 * inner certificate whose center lies in outer part a. Output is pruned.
 *
 * `centers` must list the inner centers in order; throws CenterMismatch if
 * they disagree or the outer certificate references another point.
 */
TverbergCertificate combine(const PointSet& points, const PointSet& centers, const TverbergCertificate& outer,
                            std::span<const TverbergCertificate> inner, Exec exec = Exec::parallel);

/// Enumeration cap for brute force; TVERBERG_BRUTE_CAP overrides the default of 12.
std::size_t default_brute_cap();

/**
 * Exhaustive search over partitions of `points` into r nonempty parts (of at
 * most d+1 points when that can cover the set), in restricted-growth-string
 * order; the first whose hulls intersect, by linear feasibility, wins.
 */
TverbergCertificate brute_force_tverberg(const PointSet& points, std::size_t r,
                                         std::size_t cap = default_brute_cap());

enum class SmallSolver { brute, ms, automatic };

const char* to_string(SmallSolver mode);

/**
 * Collects ~2^d/(d+1) certificates of depth ceil(n / 2^(d+1)) with the simple
 * algorithm, solves their centers with brute force or Radon doubling, and
 * combines. Instances with n <= 2^(d+1) go to the small solver directly.
 */
TverbergCertificate better_tverberg(const PointSet& points, SmallSolver mode = SmallSolver::automatic,
                                    std::size_t cap = default_brute_cap());

}  // namespace tverberg
