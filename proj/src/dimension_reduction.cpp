#include "tverberg/dimension_reduction.hpp"

#include <cmath>
#include <string>

#include "tverberg/bounds.hpp"
#include "tverberg/miller_sheehy.hpp"

namespace tverberg {

TverbergFlatCertificate lift_through_flat(const PointSet& points, const Flat& h, const TverbergCertificate& proj_cert,
                                          Exec exec) {
  const std::size_t d = points.dimension();
  if (h.ambient_dimension() != d || h.dimension() == 0 || h.dimension() > d)
    throw Error(ErrorCode::DimensionMismatch, "flat does not live in the point space");
  if (proj_cert.center.size() != h.dimension())
    throw Error(ErrorCode::DimensionMismatch, "projected center must be in the flat's coordinates");
  if (proj_cert.part_count() == 0) throw Error(ErrorCode::InvalidWitness, "projected certificate has no parts");
  for (PointId id : proj_cert.ids)
    if (id >= points.size()) throw Error(ErrorCode::InvalidWitness, "projected part references an unknown id");

  TverbergFlatCertificate out;
  const Point lifted = lift(proj_cert.center, h);
  out.flat = h.orthogonal_complement(lifted);
  out.partition = proj_cert;
  out.partition.center = lifted;

  const std::size_t r = proj_cert.part_count();
  const std::vector<double> x = part_points(points, proj_cert, exec);
  out.intersection_points.reserve(r);
  for (std::size_t i = 0; i < r; ++i)
    out.intersection_points.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(i * d),
                                         x.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
  return out;
}

TverbergCertificate split_dimension_tverberg(const PointSet& points, std::size_t delta, const Solver& inner,
                                             Exec exec) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  const std::size_t d = points.dimension();
  if (delta == 0 || delta > d)
    throw Error(ErrorCode::DimensionMismatch,
                "split dimension " + std::to_string(delta) + " outside 1.." + std::to_string(d));

  if (delta == d) {
    TverbergCertificate cert = inner.solve(points);
    if (!cert.pruned) prune_parts(cert, points, exec);
    return cert;
  }

  const Flat h = Flat::coordinate(Point(d, 0.0), 0, delta);
  const PointSet projected = points.coordinate_slice(0, delta);
  TverbergCertificate below = inner.solve(projected);
  if (!below.pruned) prune_parts(below, projected, exec);
  const TverbergFlatCertificate flat_cert = lift_through_flat(points, h, below, exec);

  const std::size_t rest = d - delta;
  const std::size_t r = flat_cert.intersection_points.size();
  std::vector<double> q;
  q.reserve(r * rest);
  for (const auto& p : flat_cert.intersection_points) {
    const Point coords = project(p, flat_cert.flat);
    q.insert(q.end(), coords.begin(), coords.end());
  }
  const PointSet qset(rest, std::move(q));
  const TverbergCertificate qcert = split_dimension_tverberg(qset, std::min(delta, rest), inner, exec);

  const auto& parts = flat_cert.partition;
  TverbergCertificate out;
  out.center = lift(qcert.center, flat_cert.flat);
  for (std::size_t a = 0; a < qcert.part_count(); ++a) {
    const auto qa = qcert.part(a);
    for (std::size_t e = 0; e < qa.size(); ++e) {
      const auto pi = parts.part(qa.ids[e]);
      for (std::size_t f = 0; f < pi.size(); ++f) {
        out.ids.push_back(pi.ids[f]);
        out.weights.push_back(qa.weights[e] * pi.weights[f]);
      }
    }
    out.offsets.push_back(out.ids.size());
  }
  out.depth = out.part_count();
  prune_parts(out, points, exec);
  return out;
}

Solver bootstrap_solver(std::size_t dimension) {
  return {[](const PointSet& p) { return bootstrap_tverberg(p); },
          4.0 * std::pow(static_cast<double>(dimension + 1), 3)};
}

TverbergCertificate bootstrap_tverberg(const PointSet& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  const std::size_t d = points.dimension();
  if (d == 1) return median_partition_1d(points);

  const std::size_t n = points.size();
  const std::size_t half = (d + 1) / 2;
  const Solver half_solver = bootstrap_solver(half);
  const Solver split{[half, half_solver](const PointSet& p) { return split_dimension_tverberg(p, half, half_solver); },
                     half_solver.rho * half_solver.rho};

  CollectParams params;
  params.beta = 2.0;
  params.rho = split.rho;
  params.target_depth = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(static_cast<double>(n) / (params.beta * params.rho) - 1e-12)));
  auto collected = collect(points, params, split, CollectDepth::adaptive);

  std::vector<double> coords;
  std::vector<TverbergCertificate> certs;
  coords.reserve(collected.size() * d);
  certs.reserve(collected.size());
  for (auto& c : collected) {
    coords.insert(coords.end(), c.cert.center.begin(), c.cert.center.end());
    certs.push_back(std::move(c.cert));
  }
  const PointSet centers(d, std::move(coords));
  const TverbergCertificate outer = ms_tverberg(centers);
  return combine(points, centers, outer, certs);
}

}  // namespace tverberg
