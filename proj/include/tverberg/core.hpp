#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tverberg {

using PointId = std::size_t;
using Point = std::vector<double>;

/// Relative tolerance on weight sums and coefficient sums.
inline constexpr double kSumTol = 1e-9;
/// Geometric tolerance, relative to PointSet::scale().
inline constexpr double kGeomTol = 1e-9;
/// Default tolerance used when validating finished certificates.
inline constexpr double kVerifyTol = 1e-8;

enum class ErrorCode {
  DimensionMismatch,
  NumericallySingular,
  RankOutOfRange,
  InvalidWitness,
  InvalidFlat,
  EmptyInput,
  ParamsOutOfRange,
  CenterMismatch,
  CapExceeded,
  Infeasible,
  ParseError,
  InvalidSpec,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/**
 * A dense set of n points in R^d, stored row-major. Point identities are the
 * row indices 0..n-1; subsets are new PointSets together with an id map back
 * to the parent.
 */
class PointSet {
 public:
  PointSet() = default;
  /// Throws DimensionMismatch if coords.size() is not a multiple of dimension
  /// and InvalidSpec on non-finite coordinates.
  PointSet(std::size_t dimension, std::vector<double> coords);
  static PointSet from_points(std::span<const Point> points);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  std::span<const double> operator[](PointId id) const noexcept {
    return {coords_.data() + id * dim_, dim_};
  }
  Point point(PointId id) const;
  const std::vector<double>& coords() const noexcept { return coords_; }

  /// Largest absolute coordinate, or 1 when every coordinate is zero.
  double scale() const noexcept { return scale_; }

  /// Rows `ids` of this set, renumbered 0..ids.size()-1.
  PointSet subset(std::span<const PointId> ids) const;
  /// Keeps coordinates [first, first + count) of every point.
  PointSet coordinate_slice(std::size_t first, std::size_t count) const;

 private:
  std::size_t dim_ = 0;
  std::size_t n_ = 0;
  std::vector<double> coords_;
  double scale_ = 1.0;
};

/// Convex combination over point ids; weights are parallel to ids.
struct Witness {
  std::vector<PointId> ids;
  std::vector<double> weights;

  std::size_t size() const noexcept { return ids.size(); }
};

struct PartView {
  std::span<const PointId> ids;
  std::span<const double> weights;

  std::size_t size() const noexcept { return ids.size(); }
};

/**
 * A center point together with a partition of (part of) a PointSet. Part i
 * occupies entries [offsets[i], offsets[i+1]) of `ids` / `weights`, and its
 * weights are a convex combination that reproduces `center`.
 */
struct TverbergCertificate {
  Point center;
  std::vector<std::size_t> offsets{0};
  std::vector<PointId> ids;
  std::vector<double> weights;
  std::size_t depth = 0;
  bool pruned = false;

  std::size_t part_count() const noexcept { return offsets.size() - 1; }
  PartView part(std::size_t i) const noexcept {
    const auto b = offsets[i];
    const auto e = offsets[i + 1];
    return {std::span<const PointId>(ids).subspan(b, e - b),
            std::span<const double>(weights).subspan(b, e - b)};
  }
  Witness witness(std::size_t i) const;

  /// Appends a part and bumps depth.
  void add_part(std::span<const PointId> part_ids, std::span<const double> part_weights);
  /// Keeps the first `r` parts.
  void truncate(std::size_t r);
  /// Replaces every id by map[id].
  void remap(std::span<const PointId> map);
  /// All ids used by some part, ascending.
  std::vector<PointId> ground_set() const;
};

/// Certificate with a single part {id}, weight 1, centered on the point.
TverbergCertificate singleton_certificate(const PointSet& points, PointId id);

/// Nonzero coefficients that sum to zero and annihilate the points affinely.
struct AffineDependency {
  std::vector<PointId> ids;
  std::vector<double> coeffs;
};

/**
 * Affine dependency of the points `ids` (at least d+2 of them) found by
 * Gaussian elimination with partial pivoting. Normalized so that the largest
 * |coefficient| is 1 and the first nonzero one is positive.
 */
AffineDependency affine_dependency(const PointSet& points, std::span<const PointId> ids);
AffineDependency affine_dependency(std::span<const Point> points);

/// An affine subspace: origin plus an orthonormal basis.
struct Flat {
  Point origin;
  std::vector<Point> basis;

  std::size_t ambient_dimension() const noexcept { return origin.size(); }
  std::size_t dimension() const noexcept { return basis.size(); }

  /// Throws InvalidFlat unless basis vectors are orthonormal within kGeomTol.
  void validate() const;

  /// Flat through `origin` spanned by the unit vectors e_first..e_{first+count-1}.
  static Flat coordinate(const Point& origin, std::size_t first, std::size_t count);
  /// The complementary flat through `through` (basis completes this flat's basis).
  Flat orthogonal_complement(const Point& through) const;
};

/// Intrinsic coordinates of p - origin in the flat's basis.
Point project(std::span<const double> p, const Flat& flat);
/// origin + sum coords[i] * basis[i].
Point lift(std::span<const double> coords, const Flat& flat);

struct RankSelection {
  double value;
  std::size_t index;
};

/// The rank-th smallest (1-based) of `values` under (value, index) order.
RankSelection select_rank(std::span<const double> values, std::size_t rank);

namespace detail {

/// Null vector of the (d+1) x m system [points; 1...1] for m >= d+2 points
/// given row-major in `pts` (m rows of d). Writes m coefficients into `out`.
/// `work` is scratch space, resized as needed. Returns false when the result
/// fails its residual check.
bool solve_affine_dependency(std::span<const double> pts, std::size_t m, std::size_t d,
                             std::span<double> out, std::vector<double>& work);

}  // namespace detail

}  // namespace tverberg
