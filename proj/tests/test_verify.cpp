#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "tverberg/algos.hpp"
#include "tverberg/verify.hpp"

using namespace tverberg;

namespace {

TverbergCertificate sample_certificate(const PointSet& p) { return simple_tverberg(p); }

}  // namespace

TEST(Verify, LibraryOutputIsValid) {
  auto p = testutil::random_points(3, 300, 1);
  auto c = sample_certificate(p);
  auto report = verify_certificate(p, c);
  EXPECT_TRUE(report.valid());
  ASSERT_EQ(report.checks.size(), 5u);
  for (char label : {'a', 'b', 'c', 'd', 'e'}) EXPECT_TRUE(report.check(label).passed);
}

TEST(Verify, WeightPerturbation) {
  auto p = testutil::random_points(2, 100, 2);
  auto c = sample_certificate(p);
  c.weights[0] += 1e-3;
  auto report = verify_certificate(p, c);
  EXPECT_FALSE(report.valid());
  EXPECT_TRUE(!report.check('b').passed || !report.check('c').passed);
}

TEST(Verify, DuplicateId) {
  auto p = testutil::random_points(2, 100, 3);
  auto c = sample_certificate(p);
  c.ids[c.offsets[1]] = c.ids[0];
  auto report = verify_certificate(p, c);
  EXPECT_FALSE(report.check('a').passed);
  EXPECT_FALSE(report.check('c').passed);  // skipped
}

TEST(Verify, CenterShift) {
  auto p = testutil::random_points(2, 100, 4);
  auto c = sample_certificate(p);
  c.center[1] += 1e-3 * p.scale();
  auto report = verify_certificate(p, c);
  EXPECT_FALSE(report.check('c').passed);
}

TEST(Verify, IdOutOfRangeAndDepthMismatch) {
  auto p = testutil::random_points(2, 50, 5);
  auto c = sample_certificate(p);
  c.ids.back() = 50;
  c.depth += 1;
  auto report = verify_certificate(p, c);
  EXPECT_FALSE(report.check('a').passed);
  EXPECT_FALSE(report.check('e').passed);
}

TEST(Verify, PrunedFlagWithLargePart) {
  PointSet p(1, {0, 1, 2, 3});
  TverbergCertificate c;
  c.center = {1.5};
  const PointId ids[] = {0, 1, 2, 3};
  const double ws[] = {0.25, 0.25, 0.25, 0.25};
  c.add_part(ids, ws);
  c.pruned = true;
  EXPECT_FALSE(verify_certificate(p, c).check('d').passed);
  c.pruned = false;
  EXPECT_TRUE(verify_certificate(p, c).valid());
}

TEST(Verify, ZeroToleranceRejectsRounding) {
  PointSet p(1, {0.1, 0.2, 0.7});
  TverbergCertificate c;
  c.center = {0.1 / 3 + 0.2 / 3 + 0.7 / 3};
  const PointId ids[] = {0, 1, 2};
  const double ws[] = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  c.add_part(ids, ws);
  c.center[0] = std::nextafter(c.center[0], 1.0);
  EXPECT_TRUE(verify_certificate(p, c).valid());
  EXPECT_FALSE(verify_certificate(p, c, 0.0).valid());
}

TEST(Verify, SerialAndParallelAgree) {
  auto p = testutil::random_points(2, 5000, 6);
  auto c = sample_certificate(p);
  c.center[0] += 0.01;
  auto a = verify_certificate(p, c, kVerifyTol, Exec::serial);
  auto b = verify_certificate(p, c, kVerifyTol, Exec::parallel);
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
    EXPECT_EQ(a.checks[i].detail, b.checks[i].detail);
  }
}

TEST(HullMembership, Vertex) {
  std::vector<Point> tri{{0, 0}, {2, 0}, {0, 2}};
  const double x[] = {2, 0};
  auto w = hull_membership_witness(tri, x);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 1u);
  EXPECT_EQ(w->ids[0], 1u);
  EXPECT_DOUBLE_EQ(w->weights[0], 1.0);
}

TEST(HullMembership, Triangle) {
  std::vector<Point> tri{{0, 0}, {2, 0}, {0, 2}};
  const double in[] = {0.5, 0.5};
  const double out[] = {2, 2};
  EXPECT_TRUE(hull_membership(tri, in));
  EXPECT_FALSE(hull_membership(tri, out));
  // Barycentric coordinates by hand: (0.5, 0.25, 0.25).
  auto w = hull_membership_witness(tri, in);
  ASSERT_TRUE(w.has_value());
  std::vector<double> bary(3, 0.0);
  for (std::size_t j = 0; j < w->size(); ++j) bary[w->ids[j]] = w->weights[j];
  EXPECT_NEAR(bary[0], 0.5, 1e-12);
  EXPECT_NEAR(bary[1], 0.25, 1e-12);
  EXPECT_NEAR(bary[2], 0.25, 1e-12);
}

TEST(HullMembership, RandomConstructedPoints) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(-5, 5);
  std::exponential_distribution<double> e(1);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t d = 1 + rep % 5;
    const std::size_t m = 1 + rep % 9;
    std::vector<Point> pts(m, Point(d));
    for (auto& p : pts)
      for (auto& v : p) v = u(gen);
    std::vector<double> w(m);
    double s = 0;
    for (auto& v : w) s += (v = e(gen));
    Point x(d, 0.0);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < d; ++k) x[k] += w[j] / s * pts[j][k];
    auto wit = hull_membership_witness(pts, x);
    ASSERT_TRUE(wit.has_value()) << rep;
    EXPECT_LE(wit->size(), d + 1);
    for (std::size_t k = 0; k < d; ++k) {
      double acc = 0.0;
      for (std::size_t j = 0; j < wit->size(); ++j) acc += wit->weights[j] * pts[wit->ids[j]][k];
      EXPECT_NEAR(acc, x[k], 1e-9 * 5);
    }
  }
}

TEST(HullMembership, DimensionMismatch) {
  std::vector<Point> pts{{0, 0}, {1}};
  const double x[] = {0, 0};
  EXPECT_THROW(hull_membership(pts, x), Error);
}
