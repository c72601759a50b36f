#include <gtest/gtest.h>

#include <sstream>

#include "pqk/poly.hpp"
#include "support/generators.hpp"

namespace pqk {
namespace {

const RealPoly4 x0 = RealPoly4::variable(0);
const RealPoly4 x1 = RealPoly4::variable(1);
const RealPoly4 x2 = RealPoly4::variable(2);
const RealPoly4 x3 = RealPoly4::variable(3);

TEST(RealPoly4, CancellationLeavesNoZeroTerms) {
  RealPoly4 p = x0 + x1;
  p -= x0;
  EXPECT_EQ(p, x1);
  EXPECT_EQ(p.size(), 1u);
  p -= x1;
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.total_degree(), -1);
  EXPECT_TRUE(RealPoly4(Rational(0)).is_zero());
  EXPECT_TRUE((Rational(0) * (x0 + 1)).is_zero());
}

TEST(RealPoly4, Product) {
  // (x0 + x1)(x0 - x1) = x0^2 - x1^2
  EXPECT_EQ((x0 + x1) * (x0 - x1), x0 * x0 - x1 * x1);
  EXPECT_EQ(((x0 + x1) * (x0 - x1)).size(), 2u);
  EXPECT_EQ((x2 * x3 * x3).total_degree(), 3);
}

TEST(RealPoly4, Partial) {
  EXPECT_TRUE(RealPoly4(7).partial(0).is_zero());
  const RealPoly4 p = Rational(3) * x0 * x0 * x2 + x1 * x3 - 5;
  EXPECT_EQ(p.partial(0), Rational(6) * x0 * x2);
  EXPECT_EQ(p.partial(1), x3);
  EXPECT_EQ(p.partial(2), Rational(3) * x0 * x0);
  EXPECT_EQ(p.partial(3), x1);
  EXPECT_THROW(p.partial(4), std::out_of_range);
}

TEST(RealPoly4, PartialsCommute) {
  testing::Rng rng(21);
  for (int n = 0; n < 100; ++n) {
    const RealPoly4 p = testing::random_poly(rng, 5, 8);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) ASSERT_EQ(p.partial(i).partial(j), p.partial(j).partial(i));
  }
}

TEST(RealPoly4, EvaluateIsRingHomomorphism) {
  testing::Rng rng(22);
  for (int n = 0; n < 200; ++n) {
    const RealPoly4 p = testing::random_poly(rng, 4);
    const RealPoly4 q = testing::random_poly(rng, 4);
    const PointQ x = testing::random_point(rng);
    ASSERT_EQ((p * q).evaluate(x), p.evaluate(x) * q.evaluate(x));
    ASSERT_EQ((p + q).evaluate(x), p.evaluate(x) + q.evaluate(x));
    ASSERT_NEAR((p * q).evaluate(to_double(x)), (p * q).evaluate(x).get_d(), 1e-9);
  }
}

TEST(RealPoly4, EvaluateExample) {
  const RealPoly4 p = Rational(1, 2) * x0 * x0 - x1 * x3 + 2;
  EXPECT_EQ(p.evaluate(PointQ{3, 1, 0, 4}), Rational(9, 2) - 4 + 2);
  EXPECT_DOUBLE_EQ(p.evaluate(Point{3.0, 1.0, 0.0, 4.0}), 2.5);
}

TEST(RealPoly4, Printing) {
  std::ostringstream os;
  os << Rational(2) * x0 * x0 - x1 * x3 + Rational(1, 2);
  EXPECT_EQ(os.str(), "2*x0^2 - x1*x3 + 1/2");
  std::ostringstream zero;
  zero << RealPoly4();
  EXPECT_EQ(zero.str(), "0");
}

}  // namespace
}  // namespace pqk
