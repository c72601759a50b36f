#include <gtest/gtest.h>

#include <cmath>

#include "pqk/error.hpp"
#include "pqk/geometry.hpp"
#include "support/control.hpp"

namespace pqk {
namespace {

const Point kInterior{2.5, 0.05, 0.05, 0.05};

MetricSampler example_a_metric() {
  return conformal_metric(h_squared(builtin_example(BuiltinExample::A), -1));
}

TEST(Weyl, FlatMetric) {
  const MetricSampler flat = [](const Point&) { return Matrix4(Eigen::Vector4d(-1, -1, 1, 1).asDiagonal()); };
  const CurvatureSample c = curvature_numeric(flat, kInterior, 1e-3);
  EXPECT_LT(c.max_riemann, 1e-12);
  EXPECT_LT(c.max_weyl, 1e-12);
}

TEST(Weyl, ConformallyFlatExampleConverges) {
  const MetricSampler g = example_a_metric();
  const double w1 = weyl_numeric(g, kInterior, 1e-3);
  const double w2 = weyl_numeric(g, kInterior, 5e-4);
  EXPECT_LT(w1, 1e-6);
  EXPECT_LT(w2, w1);
  EXPECT_GE(std::log2(w1 / w2), 1.5);
  // The Riemann tensor itself is far from zero.
  EXPECT_GT(curvature_numeric(g, kInterior, 1e-3).max_riemann, 1e-3);
}

TEST(Weyl, ControlMatchesExactOracle) {
  const testing::PolyMetric g = testing::control_metric();
  const Rational exact = testing::exact_max_weyl(g, testing::kControlPoint);
  EXPECT_EQ(exact, testing::kControlWeyl);
  const double numeric = weyl_numeric(testing::sampler_of(g), to_double(testing::kControlPoint), 1e-3);
  EXPECT_NEAR(numeric, exact.get_d(), 1e-6);
  EXPECT_GT(numeric, 1e-2);
}

TEST(Weyl, OracleSeesConformalFlatness) {
  // g = (1 + x0^2) G is conformally flat with a polynomial factor.
  const RealPoly4 x0 = RealPoly4::variable(0);
  testing::PolyMetric g;
  const RealPoly4 factor = RealPoly4(1) + x0 * x0;
  g[0][0] = Rational(-1) * factor;
  g[1][1] = Rational(-1) * factor;
  g[2][2] = factor;
  g[3][3] = factor;
  EXPECT_EQ(testing::exact_max_weyl(g, testing::kControlPoint), 0);
  EXPECT_LT(weyl_numeric(testing::sampler_of(g), to_double(testing::kControlPoint), 1e-3), 1e-6);
}

TEST(Weyl, FromRiemannHasWeylSymmetries) {
  // The nested differences break the pair symmetries at O(step^2).
  const CurvatureSample c = curvature_numeric(testing::sampler_of(testing::control_metric()),
                                              to_double(testing::kControlPoint), 1e-3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int cc = 0; cc < 4; ++cc)
        for (int d = 0; d < 4; ++d) {
          EXPECT_NEAR(c.weyl[a][b][cc][d], -c.weyl[b][a][cc][d], 1e-6);
          EXPECT_NEAR(c.weyl[a][b][cc][d], c.weyl[cc][d][a][b], 1e-6);
        }
}

TEST(Weyl, SingularMetricThrows) {
  const MetricSampler zero = [](const Point&) { return Matrix4(Matrix4::Zero()); };
  EXPECT_THROW(weyl_numeric(zero, kInterior, 1e-3), SingularMetric);
}

}  // namespace
}  // namespace pqk
