#pragma once

#include <deque>
#include <functional>
#include <vector>

#include "tverberg/core.hpp"

namespace tverberg {

/// Pruned certificates over disjoint ground sets, grouped by level: every
/// certificate at level k has depth >= 2^k.
struct DepthBuckets {
  std::vector<std::deque<TverbergCertificate>> levels;

  std::size_t certificate_count() const;
  /// Throws Internal if a certificate is unpruned, too shallow, or shares
  /// an id with another one.
  void check_invariant(const PointSet& points) const;
};

using DoublingObserver = std::function<void(const DepthBuckets&)>;

/**
 * Radon doubling. Starts from n singleton certificates; while some level
 * holds d+2 certificates, the d+2 oldest of the lowest such level are merged
 * through a Radon partition of their centers into one certificate of twice
 * the depth, which is pruned and moved one level up. Points dropped by the
 * pruning re-enter level 0 as singletons. Returns the deepest certificate;
 * depth >= ceil(n / 2(d+1)^2).
 *
 * `observer`, if set, sees the buckets after every doubling step.
 */
TverbergCertificate ms_tverberg(const PointSet& points, const DoublingObserver& observer = {});

}  // namespace tverberg
