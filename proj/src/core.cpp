#include "tverberg/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tverberg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NumericallySingular: return "NumericallySingular";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::InvalidFlat: return "InvalidFlat";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(std::size_t dimension, std::vector<double> coords)
    : dim_(dimension), coords_(std::move(coords)) {
  if (dim_ == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
  if (coords_.size() % dim_ != 0)
    throw Error(ErrorCode::DimensionMismatch, "coordinate count is not a multiple of the dimension");
  n_ = coords_.size() / dim_;
  double s = 0.0;
  for (double c : coords_) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidSpec, "non-finite coordinate");
    s = std::max(s, std::abs(c));
  }
  scale_ = s > 0.0 ? s : 1.0;
}

PointSet PointSet::from_points(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  const std::size_t d = points.front().size();
  std::vector<double> coords;
  coords.reserve(points.size() * d);
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "points differ in dimension");
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointSet(d, std::move(coords));
}

Point PointSet::point(PointId id) const {
  auto row = (*this)[id];
  return Point(row.begin(), row.end());
}

PointSet PointSet::subset(std::span<const PointId> ids) const {
  PointSet out;
  out.dim_ = dim_;
  out.n_ = ids.size();
  out.coords_.resize(ids.size() * dim_);
  double s = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const double* src = coords_.data() + ids[i] * dim_;
    double* dst = out.coords_.data() + i * dim_;
    for (std::size_t k = 0; k < dim_; ++k) {
      dst[k] = src[k];
      s = std::max(s, std::abs(src[k]));
    }
  }
  out.scale_ = s > 0.0 ? s : 1.0;
  return out;
}

PointSet PointSet::coordinate_slice(std::size_t first, std::size_t count) const {
  if (count == 0 || first + count > dim_)
    throw Error(ErrorCode::DimensionMismatch, "coordinate slice out of range");
  PointSet out;
  out.dim_ = count;
  out.n_ = n_;
  out.coords_.resize(n_ * count);
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    const double* src = coords_.data() + i * dim_ + first;
    double* dst = out.coords_.data() + i * count;
    for (std::size_t k = 0; k < count; ++k) {
      dst[k] = src[k];
      s = std::max(s, std::abs(src[k]));
    }
  }
  out.scale_ = s > 0.0 ? s : 1.0;
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

Witness TverbergCertificate::witness(std::size_t i) const {
  auto v = part(i);
  return {std::vector<PointId>(v.ids.begin(), v.ids.end()),
          std::vector<double>(v.weights.begin(), v.weights.end())};
}

void TverbergCertificate::add_part(std::span<const PointId> part_ids,
                                   std::span<const double> part_weights) {
  ids.insert(ids.end(), part_ids.begin(), part_ids.end());
  weights.insert(weights.end(), part_weights.begin(), part_weights.end());
  offsets.push_back(ids.size());
  depth = part_count();
}

void TverbergCertificate::truncate(std::size_t r) {
  if (r >= part_count()) return;
  offsets.resize(r + 1);
  ids.resize(offsets.back());
  weights.resize(offsets.back());
  depth = r;
}

void TverbergCertificate::remap(std::span<const PointId> map) {
  for (auto& id : ids) id = map[id];
}

std::vector<PointId> TverbergCertificate::ground_set() const {
  std::vector<PointId> g(ids);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

TverbergCertificate singleton_certificate(const PointSet& points, PointId id) {
  TverbergCertificate cert;
  cert.center = points.point(id);
  const double one = 1.0;
  cert.add_part(std::span<const PointId>(&id, 1), std::span<const double>(&one, 1));
  cert.pruned = true;
  return cert;
}

// ---------------------------------------------------------------------------
// Affine dependencies

namespace detail {

bool solve_affine_dependency(std::span<const double> pts, std::size_t m, std::size_t d,
                             std::span<double> out, std::vector<double>& work) {
  const std::size_t rows = d + 1;
  work.assign(rows * m, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return work[r * m + c]; };

  // Translate to the first point and rescale; the dependency is invariant
  // under affine maps, and this keeps the pivot threshold meaningful.
  double spread = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      spread = std::max(spread, std::abs(pts[j * d + k] - pts[k]));
      scale = std::max(scale, std::abs(pts[j * d + k]));
    }
  if (spread == 0.0) spread = 1.0;
  if (scale == 0.0) scale = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < d; ++k) at(k, j) = (pts[j * d + k] - pts[k]) / spread;
    at(d, j) = 1.0;
  }

  constexpr double kPivotTol = 1e-12;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t pivot_col_of_row[64];
  std::vector<std::size_t> pivot_cols_heap;
  std::size_t* pivot_col = pivot_col_of_row;
  if (rows > 64) {
    pivot_cols_heap.resize(rows);
    pivot_col = pivot_cols_heap.data();
  }

  std::size_t row = 0;
  std::size_t free_col = kNone;
  for (std::size_t col = 0; col < m; ++col) {
    if (row == rows) {
      if (free_col == kNone) free_col = col;
      break;
    }
    std::size_t best = row;
    double best_abs = std::abs(at(row, col));
    for (std::size_t r = row + 1; r < rows; ++r) {
      const double a = std::abs(at(r, col));
      if (a > best_abs) {
        best_abs = a;
        best = r;
      }
    }
    if (best_abs <= kPivotTol) {
      if (free_col == kNone) free_col = col;
      continue;
    }
    if (best != row)
      for (std::size_t c = 0; c < m; ++c) std::swap(at(best, c), at(row, c));
    const double inv = 1.0 / at(row, col);
    // Columns left of `col` may hold sub-threshold residue in free columns,
    // so the whole row takes part in the update.
    for (std::size_t c = 0; c < m; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      const double f = at(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < m; ++c) at(r, c) -= f * at(row, c);
    }
    pivot_col[row] = col;
    ++row;
  }
  if (free_col == kNone) return false;  // unreachable for m >= d+2

  std::fill(out.begin(), out.begin() + m, 0.0);
  out[free_col] = 1.0;
  for (std::size_t r = 0; r < row; ++r) out[pivot_col[r]] = -at(r, free_col);

  double max_abs = 0.0;
  for (std::size_t j = 0; j < m; ++j) max_abs = std::max(max_abs, std::abs(out[j]));
  if (!(max_abs > 0.0) || !std::isfinite(max_abs)) return false;
  for (std::size_t j = 0; j < m; ++j) {
    out[j] /= max_abs;
    if (std::abs(out[j]) <= 1e-14) out[j] = 0.0;
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (out[j] == 0.0) continue;
    if (out[j] < 0.0)
      for (std::size_t i = 0; i < m; ++i) out[i] = -out[i];
    break;
  }

  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) sum += out[j];
  if (std::abs(sum) > kSumTol) return false;
  for (std::size_t k = 0; k < d; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) acc += out[j] * pts[j * d + k];
    if (std::abs(acc) > kGeomTol * scale) return false;
  }
  return true;
}

}  // namespace detail

AffineDependency affine_dependency(const PointSet& points, std::span<const PointId> ids) {
  const std::size_t d = points.dimension();
  const std::size_t m = ids.size();
  if (m < d + 2)
    throw Error(ErrorCode::DimensionMismatch, "an affine dependency needs at least d+2 points");
  std::vector<double> pts(m * d);
  for (std::size_t j = 0; j < m; ++j) {
    auto p = points[ids[j]];
    std::copy(p.begin(), p.end(), pts.begin() + j * d);
  }
  AffineDependency dep;
  dep.ids.assign(ids.begin(), ids.end());
  dep.coeffs.resize(m);
  std::vector<double> work;
  if (!detail::solve_affine_dependency(pts, m, d, dep.coeffs, work))
    throw Error(ErrorCode::NumericallySingular, "elimination could not certify a null vector");
  return dep;
}

AffineDependency affine_dependency(std::span<const Point> points) {
  PointSet set = PointSet::from_points(points);
  std::vector<PointId> ids(set.size());
  std::iota(ids.begin(), ids.end(), PointId{0});
  return affine_dependency(set, ids);
}

// ---------------------------------------------------------------------------
// Flats

void Flat::validate() const {
  const std::size_t d = origin.size();
  if (d == 0) throw Error(ErrorCode::InvalidFlat, "flat has no ambient dimension");
  if (basis.size() > d) throw Error(ErrorCode::InvalidFlat, "more basis vectors than dimensions");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != d) throw Error(ErrorCode::DimensionMismatch, "basis vector length");
    for (std::size_t j = i; j < basis.size(); ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < d; ++k) dot += basis[i][k] * basis[j][k];
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(dot - want) > kGeomTol) throw Error(ErrorCode::InvalidFlat, "basis is not orthonormal");
    }
  }
}

Flat Flat::coordinate(const Point& origin, std::size_t first, std::size_t count) {
  const std::size_t d = origin.size();
  if (first + count > d) throw Error(ErrorCode::DimensionMismatch, "coordinate flat out of range");
  Flat f;
  f.origin = origin;
  f.basis.assign(count, Point(d, 0.0));
  for (std::size_t i = 0; i < count; ++i) f.basis[i][first + i] = 1.0;
  return f;
}

Flat Flat::orthogonal_complement(const Point& through) const {
  const std::size_t d = ambient_dimension();
  if (through.size() != d) throw Error(ErrorCode::DimensionMismatch, "complement origin");
  Flat out;
  out.origin = through;
  std::vector<Point> all = basis;
  // Gram-Schmidt over e_1..e_d, keeping the vectors that survive.
  for (std::size_t axis = 0; axis < d && all.size() < d; ++axis) {
    Point v(d, 0.0);
    v[axis] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : all) {
        double dot = 0.0;
        for (std::size_t k = 0; k < d; ++k) dot += v[k] * b[k];
        for (std::size_t k = 0; k < d; ++k) v[k] -= dot * b[k];
      }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (double& x : v) x /= norm;
    all.push_back(v);
    out.basis.push_back(std::move(v));
  }
  return out;
}

Point project(std::span<const double> p, const Flat& flat) {
  const std::size_t d = flat.ambient_dimension();
  if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "point and flat dimensions differ");
  Point coords(flat.dimension(), 0.0);
  for (std::size_t i = 0; i < flat.dimension(); ++i) {
    const auto& b = flat.basis[i];
    double acc = 0.0;
    for (std::size_t k = 0; k < d; ++k) acc += (p[k] - flat.origin[k]) * b[k];
    coords[i] = acc;
  }
  return coords;
}

Point lift(std::span<const double> coords, const Flat& flat) {
  if (coords.size() != flat.dimension())
    throw Error(ErrorCode::DimensionMismatch, "intrinsic coordinate count differs from flat dimension");
  Point p = flat.origin;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += coords[i] * flat.basis[i][k];
  return p;
}

// ---------------------------------------------------------------------------
// Selection

RankSelection select_rank(std::span<const double> values, std::size_t rank) {
  if (rank < 1 || rank > values.size())
    throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(rank) + " of " +
                                               std::to_string(values.size()));
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto less = [&](std::size_t a, std::size_t b) {
    return values[a] < values[b] || (values[a] == values[b] && a < b);
  };
  std::nth_element(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(rank - 1), idx.end(), less);
  const std::size_t i = idx[rank - 1];
  return {values[i], i};
}

}  // namespace tverberg
