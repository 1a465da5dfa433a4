#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include "test_util.hpp"
#include "tverberg/algos.hpp"
#include "tverberg/caratheodory.hpp"
#include "tverberg/miller_sheehy.hpp"

using namespace tverberg;
using testutil::ceil_div;
using testutil::certificate_ok;
using testutil::random_points;

namespace {

std::vector<std::vector<PointId>> parts_of(const TverbergCertificate& c) {
  std::vector<std::vector<PointId>> out;
  for (std::size_t i = 0; i < c.part_count(); ++i) {
    auto p = c.part(i);
    std::vector<PointId> ids(p.ids.begin(), p.ids.end());
    std::sort(ids.begin(), ids.end());
    out.push_back(ids);
  }
  return out;
}

}  // namespace

TEST(Median, OddCount) {
  PointSet p(1, {1, 2, 3, 4, 5});
  auto c = median_partition_1d(p);
  EXPECT_EQ(c.center, (Point{3}));
  EXPECT_EQ(c.depth, 3u);
  EXPECT_EQ(parts_of(c), (std::vector<std::vector<PointId>>{{0, 4}, {1, 3}, {2}}));
  EXPECT_TRUE(c.pruned);
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Median, EvenCount) {
  PointSet p(1, {4, 3, 2, 1});
  auto c = median_partition_1d(p);
  EXPECT_EQ(c.center, (Point{2}));
  EXPECT_EQ(parts_of(c), (std::vector<std::vector<PointId>>{{0, 3}, {1, 2}}));
  // The center is an endpoint of the inner pair: all weight on it.
  auto inner = c.witness(1);
  EXPECT_EQ(inner.ids[0], 2u);
  EXPECT_EQ(inner.weights[0], 1.0);
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Median, Single) {
  PointSet p(1, {42});
  auto c = median_partition_1d(p);
  EXPECT_EQ(c.center, (Point{42}));
  EXPECT_EQ(c.depth, 1u);
}

TEST(Median, TiesById) {
  PointSet p(1, {1, 1, 1, 1, 1});
  auto c = median_partition_1d(p);
  EXPECT_EQ(parts_of(c), (std::vector<std::vector<PointId>>{{0, 4}, {1, 3}, {2}}));
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Median, LargeInputMatchesSortOracle) {
  // Exercises the radix path: pairing must follow the (value, id) order.
  std::mt19937_64 gen(12);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> small(-3, 3);
  std::vector<double> v(5001);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i % 3 ? g(gen) : small(gen) * 0.5;
  v[7] = -0.0;
  v[8] = 0.0;
  PointSet p(1, v);
  std::vector<std::size_t> order(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b] || (v[a] == v[b] && a < b); });
  auto c = median_partition_1d(p);
  EXPECT_EQ(c.center[0], v[order[2500]]);
  for (std::size_t j = 0; j < 2500; ++j) {
    auto part = c.part(j);
    EXPECT_EQ(part.ids[0], order[j]);
    EXPECT_EQ(part.ids[1], order[5000 - j]);
  }
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Median, Errors) {
  EXPECT_THROW(median_partition_1d(PointSet(1, {})), Error);
  EXPECT_THROW(median_partition_1d(PointSet(2, {0, 0})), Error);
}

TEST(Lift, OddPartCountKeepsMiddleSingleton) {
  auto p = random_points(2, 9, 3);
  auto proj = median_partition_1d(p.coordinate_slice(0, 1));
  ASSERT_EQ(proj.depth, 5u);
  const Flat h = Flat::coordinate({0, 0}, 0, 1);
  auto c = lift_partition(p, h, proj);
  EXPECT_EQ(c.depth, 3u);
  EXPECT_FALSE(c.pruned);
  // Exactly one output part is a single original part.
  std::size_t singles = 0;
  for (std::size_t i = 0; i < c.part_count(); ++i) {
    auto ids = parts_of(c)[i];
    for (std::size_t j = 0; j < proj.part_count(); ++j) singles += ids == parts_of(proj)[j];
  }
  EXPECT_EQ(singles, 1u);
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Lift, CollinearAlongNormalReducesToPairing) {
  // All points on the vertical line x = 0; projections coincide.
  PointSet p(2, {0, 5, 0, 1, 0, 4, 0, 2, 0, 3});
  TverbergCertificate proj;
  proj.center = {0};
  for (PointId i = 0; i < 5; ++i) {
    const double one = 1.0;
    proj.add_part(std::span<const PointId>(&i, 1), std::span<const double>(&one, 1));
  }
  proj.pruned = true;
  auto c = lift_partition(p, Flat::coordinate({0, 0}, 0, 1), proj);
  EXPECT_EQ(c.center, (Point{0, 3}));
  // 1-D pairing of y values {5,1,4,2,3}: (1,5), (2,4), (3).
  EXPECT_EQ(parts_of(c), (std::vector<std::vector<PointId>>{{0, 1}, {2, 3}, {4}}));
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Lift, RandomPlaneFromMedian) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto p = random_points(2, 50 + seed, seed);
    auto proj = median_partition_1d(p.coordinate_slice(0, 1));
    auto c = lift_partition(p, Flat::coordinate({0, 0}, 0, 1), proj);
    EXPECT_EQ(c.depth, ceil_div(proj.depth, 2));
    EXPECT_TRUE(certificate_ok(p, c));
  }
}

TEST(Lift, Errors) {
  auto p = random_points(2, 10, 1);
  auto proj = median_partition_1d(p.coordinate_slice(0, 1));
  EXPECT_THROW(lift_partition(p, Flat::coordinate({0, 0, 0}, 0, 2), proj), Error);
  proj.ids[0] = 99;
  try {
    lift_partition(p, Flat::coordinate({0, 0}, 0, 1), proj);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidWitness);
  }
}

TEST(Simple, OneDimensionIsMedian) {
  auto p = random_points(1, 31, 2);
  auto a = simple_tverberg(p);
  auto b = median_partition_1d(p);
  EXPECT_EQ(a.center, b.center);
  EXPECT_EQ(a.ids, b.ids);
  EXPECT_EQ(a.weights, b.weights);
}

TEST(Simple, PlaneThirtyTwo) {
  auto p = random_points(2, 32, 5);
  auto c = simple_tverberg(p);
  EXPECT_GE(c.depth, 8u);
  EXPECT_TRUE(c.pruned);
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Simple, ThreeDimensionsThousand) {
  auto p = random_points(3, 1000, 6);
  auto c = simple_tverberg(p);
  EXPECT_GE(c.depth, 125u);
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Simple, DepthGuaranteeAcrossDimensions) {
  for (std::size_t d = 1; d <= 6; ++d)
    for (std::size_t n : {std::size_t{1} << d, std::size_t{64}, std::size_t{500}, std::size_t{1}, std::size_t{3}})
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto p = random_points(d, n, seed * 31 + d, seed % 2 == 0);
        auto c = simple_tverberg(p);
        EXPECT_GE(c.depth, ceil_div(n, std::size_t{1} << d)) << "d=" << d << " n=" << n;
        EXPECT_TRUE(certificate_ok(p, c)) << "d=" << d << " n=" << n;
      }
}

TEST(Simple, DuplicatesAndDegenerateInput) {
  PointSet same(3, std::vector<double>(3 * 40, 2.5));
  auto c = simple_tverberg(same);
  EXPECT_GE(c.depth, 5u);
  EXPECT_TRUE(certificate_ok(same, c));
  std::vector<double> line;
  for (int i = 0; i < 64; ++i) line.insert(line.end(), {double(i), double(2 * i), double(i % 5)});
  PointSet flat(3, line);
  c = simple_tverberg(flat);
  EXPECT_GE(c.depth, 8u);
  EXPECT_TRUE(certificate_ok(flat, c));
}

TEST(Simple, SerialMatchesParallel) {
  auto p = random_points(4, 20000, 9);
  auto a = simple_tverberg(p, Exec::serial);
  auto b = simple_tverberg(p, Exec::parallel);
  EXPECT_EQ(a.center, b.center);
  EXPECT_EQ(a.offsets, b.offsets);
  EXPECT_EQ(a.ids, b.ids);
  EXPECT_EQ(a.weights, b.weights);
}

TEST(Collect, FormulaExample) {
  auto p = random_points(2, 256, 1);
  auto params = CollectParams::make(256, 2.0, 4.0);
  EXPECT_EQ(params.target_depth, 32u);
  EXPECT_EQ(collect_count_bound(256, 2, params), 2u);
  auto out = collect(p, params, simple_solver(2));
  EXPECT_GE(out.size(), 2u);
  std::vector<char> used(256, 0);
  for (const auto& c : out) {
    EXPECT_EQ(c.cert.depth, 32u);
    EXPECT_TRUE(certificate_ok(p, c.cert));
    EXPECT_EQ(c.ids, c.cert.ground_set());
    for (PointId id : c.ids) {
      EXPECT_FALSE(used[id]);
      used[id] = 1;
    }
  }
}

TEST(Collect, SmallLine) {
  auto p = random_points(1, 8, 2);
  auto params = CollectParams::make(8, 2.0, 2.0);
  EXPECT_EQ(params.target_depth, 2u);
  EXPECT_EQ(collect_count_bound(8, 1, params), 1u);
  auto out = collect(p, params, simple_solver(1));
  EXPECT_GE(out.size(), 1u);
}

TEST(Collect, CountBoundHoldsOnRandomInputs) {
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t n : {200u, 1000u, 3000u}) {
      auto p = random_points(d, n, n + d, d % 2 == 0);
      const double rho = double(std::size_t{1} << d);
      auto params = CollectParams::make(n, 2.0, rho);
      auto out = collect(p, params, simple_solver(d));
      EXPECT_GE(out.size(), collect_count_bound(n, d, params)) << d << " " << n;
      for (const auto& c : out) EXPECT_TRUE(certificate_ok(p, c.cert));
    }
}

TEST(Collect, AdaptiveNeverBelowTarget) {
  auto p = random_points(3, 2000, 4);
  CollectParams params;
  params.beta = 2.0;
  params.rho = 1e6;
  params.target_depth = 1;
  auto out = collect(p, params, simple_solver(3), CollectDepth::adaptive);
  ASSERT_FALSE(out.empty());
  std::vector<char> used(p.size(), 0);
  for (const auto& c : out) {
    EXPECT_EQ(c.cert.depth, out.front().cert.depth);
    EXPECT_TRUE(certificate_ok(p, c.cert));
    for (PointId id : c.ids) {
      EXPECT_FALSE(used[id]);
      used[id] = 1;
    }
  }
  // Stops only once fewer than n/beta points remain.
  const auto remaining = std::count(used.begin(), used.end(), 0);
  EXPECT_LT(double(remaining), 2000.0 / 2.0);
}

TEST(Collect, ParamsOutOfRange) {
  EXPECT_THROW(CollectParams::make(10, 1.5, 2.0), Error);
  EXPECT_THROW(CollectParams::make(10, 6.0, 2.0), Error);
  try {
    CollectParams::make(100, 2.0, 64.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParamsOutOfRange);
  }
}

TEST(Combine, TrivialOuterPartition) {
  auto p = random_points(2, 400, 7);
  auto collected = collect(p, CollectParams::make(400, 2.0, 4.0), simple_solver(2));
  ASSERT_GE(collected.size(), 2u);
  std::vector<double> coords;
  std::vector<TverbergCertificate> inner;
  for (auto& c : collected) {
    coords.insert(coords.end(), c.cert.center.begin(), c.cert.center.end());
    inner.push_back(c.cert);
  }
  PointSet centers(2, coords);
  TverbergCertificate outer = brute_force_tverberg(centers, 1);
  auto z = combine(p, centers, outer, inner);
  const std::size_t r = inner.front().depth;
  EXPECT_EQ(z.depth, r);
  // Part b is the union of every inner part b (before pruning drops points).
  for (std::size_t b = 0; b < r; ++b) {
    std::vector<PointId> all;
    for (const auto& c : inner) all.insert(all.end(), c.part(b).ids.begin(), c.part(b).ids.end());
    std::sort(all.begin(), all.end());
    for (PointId id : z.part(b).ids) EXPECT_TRUE(std::binary_search(all.begin(), all.end(), id));
  }
  EXPECT_TRUE(certificate_ok(p, z));
}

TEST(Combine, RadonOuterDoublesDepth) {
  // Four 2-D instances with depth 3 each, merged by a Radon partition of their centers.
  auto p = random_points(2, 4 * 12, 8);
  std::vector<TverbergCertificate> inner;
  std::vector<double> coords;
  for (int i = 0; i < 4; ++i) {
    std::vector<PointId> ids;
    for (PointId j = 0; j < 12; ++j) ids.push_back(i * 12 + j);
    auto c = simple_tverberg(p.subset(ids));
    c.remap(ids);
    ASSERT_GE(c.depth, 3u);
    c.truncate(3);
    coords.insert(coords.end(), c.center.begin(), c.center.end());
    inner.push_back(c);
  }
  PointSet centers(2, coords);
  auto radon = radon_partition(centers);
  TverbergCertificate outer;
  outer.center = radon.point;
  outer.add_part(radon.witness_a.ids, radon.witness_a.weights);
  outer.add_part(radon.witness_b.ids, radon.witness_b.weights);
  auto z = combine(p, centers, outer, inner);
  EXPECT_EQ(z.depth, 6u);
  EXPECT_TRUE(z.pruned);
  EXPECT_TRUE(certificate_ok(p, z));
}

TEST(Combine, CenterMismatch) {
  auto p = random_points(1, 8, 1);
  auto c = median_partition_1d(p);
  PointSet wrong(1, {c.center[0] + 1.0});
  TverbergCertificate outer = singleton_certificate(wrong, 0);
  std::vector<TverbergCertificate> inner{c};
  try {
    combine(p, wrong, outer, inner);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CenterMismatch);
  }
  PointSet right(1, {c.center[0]});
  TverbergCertificate bad = singleton_certificate(right, 0);
  bad.ids[0] = 3;
  EXPECT_THROW(combine(p, right, bad, inner), Error);
}

TEST(Brute, RadonCase) {
  for (std::size_t d = 1; d <= 3; ++d) {
    auto p = random_points(d, d + 2, d);
    auto c = brute_force_tverberg(p, 2);
    EXPECT_EQ(c.depth, 2u);
    EXPECT_TRUE(certificate_ok(p, c));
  }
}

TEST(Brute, LineOfFour) {
  PointSet p(1, {1, 2, 3, 4});
  auto c = brute_force_tverberg(p, 2);
  // First partition in restricted-growth order with overlapping intervals.
  EXPECT_EQ(parts_of(c), (std::vector<std::vector<PointId>>{{0, 2}, {1, 3}}));
  EXPECT_GE(c.center[0], 2.0 - 1e-12);
  EXPECT_LE(c.center[0], 3.0 + 1e-12);
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Brute, SinglePart) {
  auto p = random_points(2, 5, 3);
  auto c = brute_force_tverberg(p, 1);
  EXPECT_EQ(c.depth, 1u);
  EXPECT_EQ(c.center, p.point(0));
  EXPECT_EQ(c.part(0).size(), 5u);
  EXPECT_FALSE(c.pruned);
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Brute, CapAndInfeasible) {
  auto p = random_points(2, 13, 1);
  try {
    brute_force_tverberg(p, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  // Three points on a line cannot be split into three parts with a common point.
  PointSet line(1, {0, 1, 2});
  try {
    brute_force_tverberg(line, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Infeasible);
  }
  EXPECT_THROW(brute_force_tverberg(line, 0), Error);
}

TEST(Brute, EnvCapOverride) {
  setenv("TVERBERG_BRUTE_CAP", "20", 1);
  EXPECT_EQ(default_brute_cap(), 20u);
  setenv("TVERBERG_BRUTE_CAP", "junk", 1);
  EXPECT_EQ(default_brute_cap(), 12u);
  unsetenv("TVERBERG_BRUTE_CAP");
  EXPECT_EQ(default_brute_cap(), 12u);
}

TEST(Brute, TverbergTheoremSmallSets) {
  std::mt19937_64 gen(5);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t d = 1 + rep % 3;
    const std::size_t n = 1 + rep % 10;
    auto p = random_points(d, n, gen());
    auto c = brute_force_tverberg(p, ceil_div(n, d + 1));
    EXPECT_EQ(c.depth, ceil_div(n, d + 1));
    EXPECT_TRUE(certificate_ok(p, c));
  }
}

TEST(Better, LineMsMode) {
  auto p = random_points(1, 100, 3);
  auto c = better_tverberg(p, SmallSolver::ms);
  EXPECT_GE(c.depth, 7u);
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Better, PlaneBruteMode) {
  auto p = random_points(2, 200, 4);
  auto c = better_tverberg(p, SmallSolver::brute, 12);
  EXPECT_GE(c.depth, 12u);
  EXPECT_TRUE(certificate_ok(p, c));
}

TEST(Better, SmallInputPassesThrough) {
  auto p = random_points(2, 8, 5);
  auto a = better_tverberg(p, SmallSolver::brute);
  auto b = brute_force_tverberg(p, 3);
  EXPECT_EQ(a.center, b.center);
  EXPECT_EQ(a.ids, b.ids);
  auto c = better_tverberg(p, SmallSolver::ms);
  auto m = ms_tverberg(p);
  EXPECT_EQ(c.center, m.center);
  EXPECT_EQ(c.ids, m.ids);
}

TEST(Better, AutoModeGuarantees) {
  for (std::size_t d = 1; d <= 5; ++d)
    for (std::size_t n : {50u, 300u, 2000u}) {
      auto p = random_points(d, n, 17 * d + n, d % 2 == 1);
      auto c = better_tverberg(p);
      const std::size_t dd = d + 1;
      const std::size_t bound = d <= 2 ? ceil_div(n, 2 * dd * dd) : ceil_div(n, 4 * dd * dd * dd);
      EXPECT_GE(c.depth, bound) << "d=" << d << " n=" << n;
      EXPECT_TRUE(c.pruned);
      EXPECT_TRUE(certificate_ok(p, c));
    }
}

TEST(Better, BruteModeRespectsCap) {
  auto p = random_points(3, 16, 2);
  try {
    better_tverberg(p, SmallSolver::brute, 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  EXPECT_NO_THROW(better_tverberg(p, SmallSolver::automatic, 12));
}
