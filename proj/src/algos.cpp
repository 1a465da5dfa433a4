#include "tverberg/algos.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>

#include "tverberg/bounds.hpp"
#include "tverberg/caratheodory.hpp"
#include "tverberg/feasibility.hpp"
#include "tverberg/miller_sheehy.hpp"

namespace tverberg {
namespace {

struct Keyed {
  double key;
  std::size_t index;
};

std::uint64_t order_bits(double v) {
  if (v == 0.0) v = 0.0;  // -0 sorts with +0
  std::uint64_t b;
  std::memcpy(&b, &v, sizeof b);
  return (b >> 63) ? ~b : b | (std::uint64_t{1} << 63);
}

bool keyed_less(const Keyed& a, const Keyed& b) { return a.key < b.key || (a.key == b.key && a.index < b.index); }

/// Stable LSD radix sort of [first, last) on order-preserving key bits.
void radix_sort_keyed(Keyed* first, Keyed* last) {
  const std::size_t n = static_cast<std::size_t>(last - first);
  if (n < 256) {
    std::sort(first, last, keyed_less);
    return;
  }
  constexpr unsigned kBits = 11;
  constexpr std::size_t kBuckets = std::size_t{1} << kBits;
  std::vector<std::uint64_t> keys(n), keys_tmp(n);
  std::vector<Keyed> v(first, last), tmp(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = order_bits(v[i].key);
  std::vector<std::size_t> count(kBuckets);
  for (unsigned shift = 0; shift < 64; shift += kBits) {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++count[(keys[i] >> shift) & (kBuckets - 1)];
    if (count[(keys[0] >> shift) & (kBuckets - 1)] == n) continue;
    std::size_t sum = 0;
    for (auto& c : count) {
      const std::size_t here = c;
      c = sum;
      sum += here;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t slot = count[(keys[i] >> shift) & (kBuckets - 1)]++;
      keys_tmp[slot] = keys[i];
      tmp[slot] = v[i];
    }
    keys.swap(keys_tmp);
    v.swap(tmp);
  }
  std::copy(v.begin(), v.end(), first);
}

/// Sorts by (key, index); v must arrive in ascending index order. Large
/// inputs are distributed into ~n/4 equal-width value buckets; small buckets
/// are insertion sorted and crowded ones radix sorted.
void sort_keyed(std::vector<Keyed>& v) {
  const std::size_t n = v.size();
  if (n < 256) {
    std::sort(v.begin(), v.end(), keyed_less);
    return;
  }
  double lo = v[0].key, hi = v[0].key;
  for (const auto& e : v) {
    lo = std::min(lo, e.key);
    hi = std::max(hi, e.key);
  }
  const std::size_t nb = n / 4;
  const double width = hi - lo;
  const double scale = static_cast<double>(nb) / width;
  if (!(width > 0.0) || !std::isfinite(scale)) {
    radix_sort_keyed(v.data(), v.data() + n);
    return;
  }
  auto bucket = [&](double key) {
    const auto b = static_cast<std::size_t>((key - lo) * scale);
    return b < nb ? b : nb - 1;
  };
  std::vector<std::size_t> start(nb + 1, 0);
  for (const auto& e : v) ++start[bucket(e.key) + 1];
  for (std::size_t b = 0; b < nb; ++b) start[b + 1] += start[b];
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  std::vector<Keyed> out(n);
  for (const auto& e : v) out[fill[bucket(e.key)]++] = e;
  for (std::size_t b = 0; b < nb; ++b) {
    Keyed* first = out.data() + start[b];
    Keyed* last = out.data() + start[b + 1];
    if (last - first > 32) {
      radix_sort_keyed(first, last);
      continue;
    }
    for (Keyed* i = first + 1; i < last; ++i) {
      const Keyed x = *i;
      Keyed* j = i;
      for (; j > first && keyed_less(x, *(j - 1)); --j) *j = *(j - 1);
      *j = x;
    }
  }
  v.swap(out);
}

/// Weight on `lo` that puts `c` on the segment [lo, hi] (1 when degenerate).
double segment_weight(double lo, double hi, double c) {
  if (!(hi > lo)) return 1.0;
  return std::clamp((hi - c) / (hi - lo), 0.0, 1.0);
}

}  // namespace

// ---------------------------------------------------------------------------

TverbergCertificate median_partition_1d(const PointSet& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "median of no points");
  if (points.dimension() != 1) throw Error(ErrorCode::DimensionMismatch, "median partition needs d = 1");
  const std::size_t n = points.size();
  const auto& v = points.coords();
  std::vector<Keyed> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = {v[i], i};
  sort_keyed(order);

  const std::size_t mid = (n + 1) / 2 - 1;
  const double c = order[mid].key;
  TverbergCertificate cert;
  cert.center = {c};
  cert.offsets.reserve(n / 2 + 2);
  cert.ids.reserve(n);
  cert.weights.reserve(n);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const auto& lo = order[j];
    const auto& hi = order[n - 1 - j];
    const double w = segment_weight(lo.key, hi.key, c);
    const PointId ids[2] = {lo.index, hi.index};
    const double ws[2] = {w, 1.0 - w};
    cert.add_part(ids, ws);
  }
  if (n % 2 == 1) {
    const PointId id = order[mid].index;
    const double one = 1.0;
    cert.add_part(std::span<const PointId>(&id, 1), std::span<const double>(&one, 1));
  }
  cert.pruned = true;
  return cert;
}

TverbergCertificate lift_partition(const PointSet& points, const Flat& h, const TverbergCertificate& proj_cert,
                                   Exec exec) {
  const std::size_t d = points.dimension();
  if (h.ambient_dimension() != d || h.dimension() + 1 != d)
    throw Error(ErrorCode::DimensionMismatch, "lifting needs a hyperplane of the ambient space");
  if (proj_cert.center.size() != d - 1)
    throw Error(ErrorCode::DimensionMismatch, "projected center must be in hyperplane coordinates");
  const std::size_t r = proj_cert.part_count();
  if (r == 0) throw Error(ErrorCode::InvalidWitness, "projected certificate has no parts");
  for (PointId id : proj_cert.ids)
    if (id >= points.size()) throw Error(ErrorCode::InvalidWitness, "projected part references an unknown id");

  const Point lifted = lift(proj_cert.center, h);
  const Flat line = h.orthogonal_complement(lifted);
  if (line.dimension() != 1) throw Error(ErrorCode::InvalidFlat, "hyperplane has no normal direction");
  const Point& normal = line.basis.front();

  const std::vector<double> x = part_points(points, proj_cert, exec);
  std::vector<Keyed> order(r);
  for (std::size_t i = 0; i < r; ++i) {
    double t = 0.0;
    for (std::size_t k = 0; k < d; ++k) t += (x[i * d + k] - lifted[k]) * normal[k];
    order[i] = {t, i};
  }
  sort_keyed(order);

  const std::size_t mid = (r + 1) / 2 - 1;
  const std::size_t center_part = order[mid].index;
  const double tc = order[mid].key;

  TverbergCertificate out;
  out.center.assign(x.begin() + static_cast<std::ptrdiff_t>(center_part * d),
                    x.begin() + static_cast<std::ptrdiff_t>((center_part + 1) * d));
  out.offsets.reserve((r + 1) / 2 + 1);
  out.ids.reserve(proj_cert.ids.size());
  out.weights.reserve(proj_cert.ids.size());
  for (std::size_t j = 0; j < r / 2; ++j) {
    const auto& lo = order[j];
    const auto& hi = order[r - 1 - j];
    const double w = lo.index == center_part ? 1.0 : segment_weight(lo.key, hi.key, tc);
    const auto plo = proj_cert.part(lo.index);
    const auto phi = proj_cert.part(hi.index);
    for (std::size_t e = 0; e < plo.size(); ++e) {
      out.ids.push_back(plo.ids[e]);
      out.weights.push_back(w * plo.weights[e]);
    }
    for (std::size_t e = 0; e < phi.size(); ++e) {
      out.ids.push_back(phi.ids[e]);
      out.weights.push_back((1.0 - w) * phi.weights[e]);
    }
    out.offsets.push_back(out.ids.size());
  }
  if (r % 2 == 1) {
    const auto pm = proj_cert.part(center_part);
    out.ids.insert(out.ids.end(), pm.ids.begin(), pm.ids.end());
    out.weights.insert(out.weights.end(), pm.weights.begin(), pm.weights.end());
    out.offsets.push_back(out.ids.size());
  }
  out.depth = out.part_count();
  out.pruned = false;
  return out;
}

TverbergCertificate simple_tverberg(const PointSet& points, Exec exec) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  const std::size_t d = points.dimension();
  if (d == 1) return median_partition_1d(points);
  const PointSet projected = points.coordinate_slice(0, d - 1);
  const TverbergCertificate below = simple_tverberg(projected, exec);
  const Flat h = Flat::coordinate(Point(d, 0.0), 0, d - 1);
  TverbergCertificate cert = lift_partition(points, h, below, exec);
  prune_parts(cert, points, exec);
  return cert;
}

Solver simple_solver(std::size_t dimension) {
  return {[](const PointSet& p) { return simple_tverberg(p); },
          static_cast<double>(bounds::ipow(2, static_cast<unsigned>(std::min<std::size_t>(dimension, 62))))};
}

// ---------------------------------------------------------------------------

CollectParams CollectParams::make(std::size_t n, double beta, double rho) {
  if (!(rho >= 1.0) || !(beta >= 2.0) || !(beta <= static_cast<double>(n) / rho))
    throw Error(ErrorCode::ParamsOutOfRange, "collect needs 2 <= beta <= n/rho (beta=" + std::to_string(beta) +
                                                 ", rho=" + std::to_string(rho) + ", n=" + std::to_string(n) + ")");
  CollectParams p;
  p.beta = beta;
  p.rho = rho;
  p.target_depth = static_cast<std::size_t>(std::ceil(static_cast<double>(n) / (beta * rho) - 1e-12));
  if (p.target_depth == 0) p.target_depth = 1;
  return p;
}

std::size_t collect_count_bound(std::size_t n, std::size_t d, const CollectParams& params) {
  const double want = static_cast<double>(n) * (1.0 - 1.0 / params.beta) /
                      (static_cast<double>(params.target_depth) * static_cast<double>(d + 1));
  return static_cast<std::size_t>(std::ceil(want - 1e-12));
}

std::vector<CollectedCertificate> collect(const PointSet& points, const CollectParams& params, const Solver& inner,
                                          CollectDepth mode) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "no points");
  if (!(params.beta >= 2.0) || params.target_depth == 0)
    throw Error(ErrorCode::ParamsOutOfRange, "collect needs beta >= 2 and a positive target depth");
  if (mode == CollectDepth::fixed && !(params.beta <= static_cast<double>(n) / params.rho))
    throw Error(ErrorCode::ParamsOutOfRange, "collect needs beta <= n/rho");

  const double nd = static_cast<double>(n);
  const auto take = static_cast<std::size_t>(std::ceil(nd / params.beta - 1e-12));
  std::vector<char> used(n, 0);
  std::size_t remaining = n;
  std::size_t delta = mode == CollectDepth::fixed ? params.target_depth : static_cast<std::size_t>(-1);
  std::vector<TverbergCertificate> certs;
  std::vector<PointId> subset;
  subset.reserve(take);

  auto release_beyond = [&](TverbergCertificate& c, std::size_t r) {
    for (std::size_t i = r; i < c.part_count(); ++i)
      for (PointId id : c.part(i).ids) {
        used[id] = 0;
        ++remaining;
      }
    c.truncate(r);
  };

  while (static_cast<double>(remaining) * params.beta >= nd && remaining > 0) {
    subset.clear();
    for (PointId id = 0; id < n && subset.size() < take; ++id)
      if (!used[id]) subset.push_back(id);

    TverbergCertificate cert = inner.solve(points.subset(subset));
    cert.remap(subset);
    if (!cert.pruned) prune_parts(cert, points);
    if (cert.depth < params.target_depth)
      throw Error(ErrorCode::Internal, "inner solver returned depth " + std::to_string(cert.depth) +
                                           " below the target " + std::to_string(params.target_depth));
    if (cert.depth < delta) {
      delta = cert.depth;
      for (auto& prev : certs) release_beyond(prev, delta);
    }
    cert.truncate(delta);
    for (PointId id : cert.ids) {
      used[id] = 1;
      --remaining;
    }
    certs.push_back(std::move(cert));
  }

  std::vector<CollectedCertificate> out;
  out.reserve(certs.size());
  for (auto& c : certs) {
    auto ground = c.ground_set();
    out.push_back({std::move(ground), std::move(c)});
  }
  return out;
}

// ---------------------------------------------------------------------------

TverbergCertificate combine(const PointSet& points, const PointSet& centers, const TverbergCertificate& outer,
                            std::span<const TverbergCertificate> inner, Exec exec) {
  const std::size_t d = points.dimension();
  if (inner.empty()) throw Error(ErrorCode::EmptyInput, "nothing to combine");
  if (centers.size() != inner.size() || centers.dimension() != d)
    throw Error(ErrorCode::CenterMismatch, "center set does not match the inner certificates");
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const auto c = centers[i];
    if (inner[i].center.size() != d) throw Error(ErrorCode::DimensionMismatch, "inner center dimension");
    for (std::size_t k = 0; k < d; ++k)
      if (std::abs(c[k] - inner[i].center[k]) > kGeomTol * points.scale())
        throw Error(ErrorCode::CenterMismatch, "center " + std::to_string(i) + " differs from its certificate");
  }
  for (PointId id : outer.ids)
    if (id >= inner.size())
      throw Error(ErrorCode::CenterMismatch, "outer certificate references a point that is not an inner center");
  if (outer.center.size() != d) throw Error(ErrorCode::DimensionMismatch, "outer center dimension");

  std::size_t r = static_cast<std::size_t>(-1);
  for (const auto& c : inner) r = std::min(r, c.part_count());
  if (r == 0) throw Error(ErrorCode::InvalidWitness, "inner certificate without parts");

  TverbergCertificate out;
  out.center = outer.center;
  const std::size_t outer_parts = outer.part_count();
  out.offsets.reserve(outer_parts * r + 1);
  for (std::size_t a = 0; a < outer_parts; ++a) {
    const auto da = outer.part(a);
    for (std::size_t b = 0; b < r; ++b) {
      for (std::size_t e = 0; e < da.size(); ++e) {
        const auto q = inner[da.ids[e]].part(b);
        const double beta = da.weights[e];
        for (std::size_t f = 0; f < q.size(); ++f) {
          out.ids.push_back(q.ids[f]);
          out.weights.push_back(beta * q.weights[f]);
        }
      }
      out.offsets.push_back(out.ids.size());
    }
  }
  out.depth = out.part_count();
  prune_parts(out, points, exec);
  return out;
}

// ---------------------------------------------------------------------------

std::size_t default_brute_cap() {
  if (const char* env = std::getenv("TVERBERG_BRUTE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 12;
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const PointSet& points, std::size_t r)
      : points_(points), n_(points.size()), d_(points.dimension()), r_(r), block_(n_, 0), sizes_(r, 0) {
    size_cap_ = n_ <= r_ * (d_ + 1) ? d_ + 1 : n_;
    origin_.assign(d_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < d_; ++k) origin_[k] += points_[i][k] / static_cast<double>(n_);
    spread_ = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < d_; ++k) spread_ = std::max(spread_, std::abs(points_[i][k] - origin_[k]));
    if (spread_ == 0.0) spread_ = 1.0;
  }

  bool run() { return assign(0, 0); }
  const TverbergCertificate& result() const { return result_; }

 private:
  bool assign(std::size_t i, std::size_t opened) {
    if (i == n_) return opened == r_ && feasible();
    // Enough points must remain to open every block.
    const std::size_t limit = std::min(opened + 1, r_);
    for (std::size_t b = 0; b < limit; ++b) {
      const std::size_t next_opened = b == opened ? opened + 1 : opened;
      if (n_ - i - 1 < r_ - next_opened) continue;
      if (sizes_[b] == size_cap_) continue;
      block_[i] = b;
      ++sizes_[b];
      const bool found = assign(i + 1, next_opened);
      --sizes_[b];
      if (found) return true;
    }
    return false;
  }

  bool feasible() {
    const std::size_t rows = (r_ - 1) * d_ + r_;
    a_.assign(rows * n_, 0.0);
    b_.assign(rows, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      const std::size_t blk = block_[j];
      auto p = points_[j];
      if (blk == 0) {
        for (std::size_t other = 1; other < r_; ++other)
          for (std::size_t k = 0; k < d_; ++k) a_[((other - 1) * d_ + k) * n_ + j] = -(p[k] - origin_[k]) / spread_;
      } else {
        for (std::size_t k = 0; k < d_; ++k) a_[((blk - 1) * d_ + k) * n_ + j] = (p[k] - origin_[k]) / spread_;
      }
      a_[((r_ - 1) * d_ + blk) * n_ + j] = 1.0;
    }
    for (std::size_t blk = 0; blk < r_; ++blk) b_[(r_ - 1) * d_ + blk] = 1.0;
    const auto res = find_feasible_point(a_, rows, n_, b_, 1e-11);
    if (!res.feasible) return false;

    TverbergCertificate cert;
    cert.center.assign(d_, 0.0);
    std::vector<double> sums(r_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) sums[block_[j]] += res.x[j];
    for (std::size_t blk = 0; blk < r_; ++blk) {
      if (!(sums[blk] > 0.0)) return false;
      std::vector<PointId> ids;
      std::vector<double> ws;
      for (std::size_t j = 0; j < n_; ++j)
        if (block_[j] == blk) {
          ids.push_back(j);
          ws.push_back(res.x[j] / sums[blk]);
        }
      if (blk == 0)
        for (std::size_t e = 0; e < ids.size(); ++e)
          for (std::size_t k = 0; k < d_; ++k) cert.center[k] += ws[e] * points_[ids[e]][k];
      cert.add_part(ids, ws);
    }
    for (std::size_t i = 0; i < r_; ++i) {
      auto part = cert.part(i);
      if (detail::reproduction_error(cert.center, part.ids, part.weights, points_) > kGeomTol * points_.scale())
        return false;
    }
    cert.pruned = size_cap_ == d_ + 1;
    result_ = std::move(cert);
    return true;
  }

  const PointSet& points_;
  std::size_t n_, d_, r_;
  std::size_t size_cap_ = 0;
  std::vector<std::size_t> block_;
  std::vector<std::size_t> sizes_;
  std::vector<double> origin_;
  double spread_ = 1.0;
  std::vector<double> a_, b_;
  TverbergCertificate result_;
};

}  // namespace

TverbergCertificate brute_force_tverberg(const PointSet& points, std::size_t r, std::size_t cap) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "no points");
  if (r == 0 || r > n) throw Error(ErrorCode::ParamsOutOfRange, "need 1 <= r <= n");
  if (n > cap)
    throw Error(ErrorCode::CapExceeded,
                "brute force on " + std::to_string(n) + " points exceeds the cap of " + std::to_string(cap));
  if (r == 1) {
    TverbergCertificate cert;
    cert.center = points.point(0);
    std::vector<PointId> ids(n);
    std::iota(ids.begin(), ids.end(), PointId{0});
    std::vector<double> ws(n, 0.0);
    ws[0] = 1.0;
    cert.add_part(ids, ws);
    cert.pruned = n <= points.dimension() + 1;
    return cert;
  }
  PartitionSearch search(points, r);
  if (!search.run())
    throw Error(ErrorCode::Infeasible, "no partition into " + std::to_string(r) + " parts has intersecting hulls");
  TverbergCertificate cert = search.result();
  if (!cert.pruned) prune_parts(cert, points);
  return cert;
}

// ---------------------------------------------------------------------------

const char* to_string(SmallSolver mode) {
  switch (mode) {
    case SmallSolver::brute: return "brute";
    case SmallSolver::ms: return "ms";
    case SmallSolver::automatic: return "auto";
  }
  return "unknown";
}

TverbergCertificate better_tverberg(const PointSet& points, SmallSolver mode, std::size_t cap) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  const std::size_t n = points.size();
  const std::size_t d = points.dimension();

  auto small = [&](const PointSet& set) {
    SmallSolver m = mode;
    if (m == SmallSolver::automatic) m = (d >= 3 || set.size() > cap) ? SmallSolver::ms : SmallSolver::brute;
    if (m == SmallSolver::brute) return brute_force_tverberg(set, bounds::tverberg(set.size(), static_cast<unsigned>(d)), cap);
    return ms_tverberg(set);
  };

  const bool tiny = d + 1 >= 63 || n <= bounds::ipow(2, static_cast<unsigned>(d + 1));
  if (tiny) return small(points);

  const Solver inner = simple_solver(d);
  const CollectParams params = CollectParams::make(n, 2.0, inner.rho);
  auto collected = collect(points, params, inner, CollectDepth::fixed);

  std::vector<double> coords;
  std::vector<TverbergCertificate> certs;
  coords.reserve(collected.size() * d);
  certs.reserve(collected.size());
  for (auto& c : collected) {
    coords.insert(coords.end(), c.cert.center.begin(), c.cert.center.end());
    certs.push_back(std::move(c.cert));
  }
  const PointSet centers(d, std::move(coords));
  const TverbergCertificate outer = small(centers);
  return combine(points, centers, outer, certs);
}

}  // namespace tverberg
