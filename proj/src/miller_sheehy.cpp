#include "tverberg/miller_sheehy.hpp"

#include <string>

#include "tverberg/algos.hpp"
#include "tverberg/caratheodory.hpp"

namespace tverberg {

std::size_t DepthBuckets::certificate_count() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

void DepthBuckets::check_invariant(const PointSet& points) const {
  const std::size_t d = points.dimension();
  std::vector<char> seen(points.size(), 0);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    for (const auto& cert : levels[k]) {
      if (!cert.pruned) throw Error(ErrorCode::Internal, "unpruned certificate at level " + std::to_string(k));
      if (cert.depth != cert.part_count() || cert.depth < (std::size_t{1} << k))
        throw Error(ErrorCode::Internal, "certificate of depth " + std::to_string(cert.depth) + " at level " +
                                             std::to_string(k));
      for (std::size_t i = 0; i < cert.part_count(); ++i)
        if (cert.part(i).size() > d + 1) throw Error(ErrorCode::Internal, "oversized part in bucket");
      for (PointId id : cert.ids) {
        if (id >= seen.size() || seen[id]) throw Error(ErrorCode::Internal, "bucket ground sets overlap");
        seen[id] = 1;
      }
    }
  }
}

TverbergCertificate ms_tverberg(const PointSet& points, const DoublingObserver& observer) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  const std::size_t n = points.size();
  const std::size_t d = points.dimension();
  const std::size_t group = d + 2;

  DepthBuckets buckets;
  buckets.levels.emplace_back();
  for (PointId id = 0; id < n; ++id) buckets.levels[0].push_back(singleton_certificate(points, id));

  std::vector<char> kept(n, 0);
  std::vector<TverbergCertificate> inner;
  std::vector<double> coords;
  for (;;) {
    std::size_t level = 0;
    while (level < buckets.levels.size() && buckets.levels[level].size() < group) ++level;
    if (level == buckets.levels.size()) break;

    auto& source = buckets.levels[level];
    inner.clear();
    coords.clear();
    for (std::size_t i = 0; i < group; ++i) {
      inner.push_back(std::move(source.front()));
      source.pop_front();
      coords.insert(coords.end(), inner.back().center.begin(), inner.back().center.end());
    }
    const PointSet centers(d, coords);
    const RadonPartition radon = radon_partition(centers);
    TverbergCertificate outer;
    outer.center = radon.point;
    outer.add_part(radon.witness_a.ids, radon.witness_a.weights);
    outer.add_part(radon.witness_b.ids, radon.witness_b.weights);
    outer.pruned = true;

    TverbergCertificate doubled = combine(points, centers, outer, inner);

    for (PointId id : doubled.ids) kept[id] = 1;
    for (const auto& c : inner)
      for (PointId id : c.ids)
        if (!kept[id]) buckets.levels[0].push_back(singleton_certificate(points, id));
    for (PointId id : doubled.ids) kept[id] = 0;

    if (level + 1 == buckets.levels.size()) buckets.levels.emplace_back();
    buckets.levels[level + 1].push_back(std::move(doubled));
    if (observer) observer(buckets);
  }

  for (std::size_t k = buckets.levels.size(); k-- > 0;)
    if (!buckets.levels[k].empty()) return std::move(buckets.levels[k].front());
  throw Error(ErrorCode::Internal, "no certificate left");
}

}  // namespace tverberg
