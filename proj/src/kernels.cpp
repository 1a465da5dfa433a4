#include "tverberg/kernels.hpp"

#include <algorithm>
#include <exception>

#include "tverberg/caratheodory.hpp"

#ifdef TVERBERG_USE_OPENMP
#include <omp.h>
#endif

namespace tverberg {
namespace {

void part_point(const PointSet& points, PartView part, double* out) {
  const std::size_t d = points.dimension();
  std::fill(out, out + d, 0.0);
  for (std::size_t j = 0; j < part.size(); ++j) {
    auto p = points[part.ids[j]];
    const double w = part.weights[j];
    for (std::size_t k = 0; k < d; ++k) out[k] += w * p[k];
  }
}

bool run_parallel(Exec exec, std::size_t parts) {
#ifdef TVERBERG_USE_OPENMP
  return exec == Exec::parallel && parts >= kParallelGrain && omp_get_max_threads() > 1;
#else
  (void)exec;
  (void)parts;
  return false;
#endif
}

std::vector<double> part_points_serial(const PointSet& points, const TverbergCertificate& cert) {
  const std::size_t d = points.dimension();
  const std::size_t r = cert.part_count();
  std::vector<double> out(r * d);
  for (std::size_t i = 0; i < r; ++i) part_point(points, cert.part(i), out.data() + i * d);
  return out;
}

std::vector<double> part_points_omp(const PointSet& points, const TverbergCertificate& cert) {
  const std::size_t d = points.dimension();
  const auto r = static_cast<std::ptrdiff_t>(cert.part_count());
  std::vector<double> out(static_cast<std::size_t>(r) * d);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < r; ++i)
    part_point(points, cert.part(static_cast<std::size_t>(i)), out.data() + i * d);
  return out;
}

void compact(TverbergCertificate& cert, const std::vector<std::size_t>& sizes) {
  std::size_t write = 0;
  const std::size_t r = cert.part_count();
  std::vector<std::size_t> offsets(r + 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t b = cert.offsets[i];
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      cert.ids[write + j] = cert.ids[b + j];
      cert.weights[write + j] = cert.weights[b + j];
    }
    write += sizes[i];
    offsets[i + 1] = write;
  }
  cert.ids.resize(write);
  cert.weights.resize(write);
  cert.offsets = std::move(offsets);
  cert.pruned = true;
}

std::size_t prune_one(TverbergCertificate& cert, const PointSet& points, std::size_t i,
                      detail::PruneScratch& scratch) {
  const std::size_t b = cert.offsets[i];
  const std::size_t e = cert.offsets[i + 1];
  if (e - b <= points.dimension() + 1) return e - b;
  return detail::prune_in_place(cert.center, std::span<PointId>(cert.ids).subspan(b, e - b),
                                std::span<double>(cert.weights).subspan(b, e - b), points, scratch);
}

void prune_parts_serial(TverbergCertificate& cert, const PointSet& points) {
  const std::size_t r = cert.part_count();
  std::vector<std::size_t> sizes(r);
  detail::PruneScratch scratch;
  for (std::size_t i = 0; i < r; ++i) sizes[i] = prune_one(cert, points, i, scratch);
  compact(cert, sizes);
}

void prune_parts_omp(TverbergCertificate& cert, const PointSet& points) {
  const auto r = static_cast<std::ptrdiff_t>(cert.part_count());
  std::vector<std::size_t> sizes(static_cast<std::size_t>(r));
  std::exception_ptr failure;
#pragma omp parallel
  {
    detail::PruneScratch scratch;
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < r; ++i) {
      try {
        sizes[static_cast<std::size_t>(i)] = prune_one(cert, points, static_cast<std::size_t>(i), scratch);
      } catch (...) {
#pragma omp critical(tverberg_prune_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  compact(cert, sizes);
}

}  // namespace

std::vector<double> part_points(const PointSet& points, const TverbergCertificate& cert, Exec exec) {
  return run_parallel(exec, cert.part_count()) ? part_points_omp(points, cert)
                                               : part_points_serial(points, cert);
}

void prune_parts(TverbergCertificate& cert, const PointSet& points, Exec exec) {
  if (cert.center.size() != points.dimension())
    throw Error(ErrorCode::DimensionMismatch, "certificate center dimension");
  if (run_parallel(exec, cert.part_count()))
    prune_parts_omp(cert, points);
  else
    prune_parts_serial(cert, points);
}

std::vector<double> part_residuals(const PointSet& points, const TverbergCertificate& cert, Exec exec) {
  const std::size_t r = cert.part_count();
  std::vector<double> out(r);
  if (run_parallel(exec, r)) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(r); ++i) {
      auto p = cert.part(static_cast<std::size_t>(i));
      out[static_cast<std::size_t>(i)] = detail::reproduction_error(cert.center, p.ids, p.weights, points);
    }
  } else {
    for (std::size_t i = 0; i < r; ++i) {
      auto p = cert.part(i);
      out[i] = detail::reproduction_error(cert.center, p.ids, p.weights, points);
    }
  }
  return out;
}

}  // namespace tverberg
