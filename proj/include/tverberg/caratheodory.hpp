#pragma once

#include <span>
#include <vector>

#include "tverberg/core.hpp"

namespace tverberg {

struct RadonPartition {
  std::vector<PointId> side_a;  ///< positive dependency coefficients
  std::vector<PointId> side_b;  ///< negative (and zero) coefficients
  Point point;
  Witness witness_a;
  Witness witness_b;
};

/// Radon partition of exactly d+2 points `ids` of `points`.
RadonPartition radon_partition(const PointSet& points, std::span<const PointId> ids);
/// Radon partition of a whole (d+2)-point set.
RadonPartition radon_partition(const PointSet& points);

/// One elimination round of the pruning loop, recorded for inspection.
struct PruneStep {
  double min_weight_before_clamp;
  double weight_sum_after;
  std::size_t removed;
};

/**
 * Carathéodory pruning: shrinks a convex combination reproducing `center` to
 * at most d+1 points of its support. Each round takes the d+2 lowest ids of
 * the current support, finds their affine dependency, and moves along it
 * (simplex ratio test) until at least one weight vanishes.
 *
 * Throws InvalidWitness when `witness` does not reproduce `center`.
 */
Witness prune(std::span<const double> center, const Witness& witness, const PointSet& points,
              std::vector<PruneStep>* trace = nullptr);

namespace detail {

struct PruneScratch {
  std::vector<double> pts;
  std::vector<double> gamma;
  std::vector<double> work;
  std::vector<std::size_t> order;
  std::vector<PointId> ids_tmp;
  std::vector<double> weights_tmp;
};

/// In-place pruning of parallel (ids, weights) arrays. Returns the new size;
/// entries past it are garbage.
std::size_t prune_in_place(std::span<const double> center, std::span<PointId> ids,
                           std::span<double> weights, const PointSet& points, PruneScratch& scratch,
                           std::vector<PruneStep>* trace = nullptr);

/// Max-norm distance between sum w_p p and center.
double reproduction_error(std::span<const double> center, std::span<const PointId> ids,
                          std::span<const double> weights, const PointSet& points);

}  // namespace detail

}  // namespace tverberg
