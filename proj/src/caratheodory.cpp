#include "tverberg/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tverberg {

RadonPartition radon_partition(const PointSet& points, std::span<const PointId> ids) {
  const std::size_t d = points.dimension();
  if (ids.size() != d + 2)
    throw Error(ErrorCode::DimensionMismatch, "a Radon partition needs exactly d+2 points");
  const AffineDependency dep = affine_dependency(points, ids);

  RadonPartition out;
  double pos = 0.0;
  double neg = 0.0;
  for (double g : dep.coeffs) (g > 0.0 ? pos : neg) += std::abs(g);
  for (std::size_t j = 0; j < ids.size(); ++j) {
    const double g = dep.coeffs[j];
    if (g > 0.0) {
      out.side_a.push_back(ids[j]);
      out.witness_a.ids.push_back(ids[j]);
      out.witness_a.weights.push_back(g / pos);
    } else {
      out.side_b.push_back(ids[j]);
      out.witness_b.ids.push_back(ids[j]);
      out.witness_b.weights.push_back(-g / neg);
    }
  }
  out.point.assign(d, 0.0);
  for (std::size_t j = 0; j < out.witness_a.size(); ++j) {
    auto p = points[out.witness_a.ids[j]];
    for (std::size_t k = 0; k < d; ++k) out.point[k] += out.witness_a.weights[j] * p[k];
  }
  return out;
}

RadonPartition radon_partition(const PointSet& points) {
  std::vector<PointId> ids(points.size());
  std::iota(ids.begin(), ids.end(), PointId{0});
  return radon_partition(points, ids);
}

namespace detail {

double reproduction_error(std::span<const double> center, std::span<const PointId> ids,
                          std::span<const double> weights, const PointSet& points) {
  const std::size_t d = points.dimension();
  double acc[64];
  std::vector<double> heap;
  double* sum = acc;
  if (d > 64) {
    heap.resize(d);
    sum = heap.data();
  }
  std::fill(sum, sum + d, 0.0);
  for (std::size_t j = 0; j < ids.size(); ++j) {
    auto p = points[ids[j]];
    const double w = weights[j];
    for (std::size_t k = 0; k < d; ++k) sum[k] += w * p[k];
  }
  double err = 0.0;
  for (std::size_t k = 0; k < d; ++k) err = std::max(err, std::abs(sum[k] - center[k]));
  return err;
}

std::size_t prune_in_place(std::span<const double> center, std::span<PointId> ids,
                           std::span<double> weights, const PointSet& points, PruneScratch& s,
                           std::vector<PruneStep>* trace) {
  const std::size_t d = points.dimension();
  std::size_t m = ids.size();
  if (center.size() != d) throw Error(ErrorCode::DimensionMismatch, "center dimension");

  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    if (weights[j] < -kSumTol) throw Error(ErrorCode::InvalidWitness, "negative weight");
    sum += weights[j];
  }
  if (std::abs(sum - 1.0) > kSumTol) throw Error(ErrorCode::InvalidWitness, "weights do not sum to 1");
  if (m <= d + 1) {
    if (reproduction_error(center, ids.first(m), weights.first(m), points) > kGeomTol * points.scale())
      throw Error(ErrorCode::InvalidWitness, "witness does not reproduce the center");
    return m;
  }

  // Drop exact-zero support, then order by id.
  std::size_t live = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (weights[j] > 0.0) {
      ids[live] = ids[j];
      weights[live] = weights[j];
      ++live;
    }
  }
  m = live;
  s.order.resize(m);
  std::iota(s.order.begin(), s.order.end(), std::size_t{0});
  std::sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
  s.ids_tmp.resize(m);
  s.weights_tmp.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    s.ids_tmp[j] = ids[s.order[j]];
    s.weights_tmp[j] = weights[s.order[j]];
  }
  std::copy(s.ids_tmp.begin(), s.ids_tmp.end(), ids.begin());
  std::copy(s.weights_tmp.begin(), s.weights_tmp.end(), weights.begin());

  // Row j of s.pts is the point ids[j].
  s.pts.resize(m * d);
  for (std::size_t j = 0; j < m; ++j) {
    auto p = points[ids[j]];
    std::copy(p.begin(), p.end(), s.pts.begin() + j * d);
  }
  {
    double err = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      double acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) acc += weights[j] * s.pts[j * d + c];
      err = std::max(err, std::abs(acc - center[c]));
    }
    if (err > kGeomTol * points.scale())
      throw Error(ErrorCode::InvalidWitness, "witness does not reproduce the center");
  }

  const std::size_t k = d + 2;
  s.gamma.resize(k);
  while (m > d + 1) {
    if (!solve_affine_dependency(std::span<const double>(s.pts).first(k * d), k, d, s.gamma, s.work))
      throw Error(ErrorCode::NumericallySingular, "pruning could not resolve an affine dependency");

    // Ratio test in both orientations; the smaller step wins, ties go to +.
    constexpr double kInf = std::numeric_limits<double>::infinity();
    double t_pos = kInf, t_neg = kInf;
    std::size_t arg_pos = k, arg_neg = k;
    for (std::size_t j = 0; j < k; ++j) {
      const double g = s.gamma[j];
      if (g > 0.0) {
        const double t = weights[j] / g;
        if (t < t_pos) {
          t_pos = t;
          arg_pos = j;
        }
      } else if (g < 0.0) {
        const double t = weights[j] / -g;
        if (t < t_neg) {
          t_neg = t;
          arg_neg = j;
        }
      }
    }
    const bool positive = t_pos <= t_neg;
    const double step = positive ? t_pos : -t_neg;
    const std::size_t arg = positive ? arg_pos : arg_neg;

    double min_w = kInf;
    for (std::size_t j = 0; j < k; ++j) {
      weights[j] -= step * s.gamma[j];
      min_w = std::min(min_w, weights[j]);
    }
    weights[arg] = 0.0;

    std::size_t kept = 0;
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (weights[j] <= kSumTol) continue;
      ids[kept] = ids[j];
      weights[kept] = weights[j];
      if (kept != j) std::copy_n(s.pts.begin() + j * d, d, s.pts.begin() + kept * d);
      total += weights[kept];
      ++kept;
    }
    const std::size_t removed = m - kept;
    m = kept;
    for (std::size_t j = 0; j < m; ++j) weights[j] /= total;
    if (trace) {
      double check = 0.0;
      for (std::size_t j = 0; j < m; ++j) check += weights[j];
      trace->push_back({min_w, check, removed});
    }
  }
  return m;
}

}  // namespace detail

Witness prune(std::span<const double> center, const Witness& witness, const PointSet& points,
              std::vector<PruneStep>* trace) {
  if (witness.ids.size() != witness.weights.size())
    throw Error(ErrorCode::InvalidWitness, "ids and weights differ in length");
  Witness out = witness;
  detail::PruneScratch scratch;
  const std::size_t m = detail::prune_in_place(center, out.ids, out.weights, points, scratch, trace);
  out.ids.resize(m);
  out.weights.resize(m);
  return out;
}

}  // namespace tverberg
