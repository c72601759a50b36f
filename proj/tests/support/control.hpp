#pragma once

// A metric that is not conformally flat, used as a negative control for the
// Weyl check: G with g00 = -1 - x1^2/2 and g01 = g10 = x2 x3 / 2.

#include "pqk/curvature.hpp"
#include "support/oracles.hpp"

namespace pqk::testing {

inline PolyMetric control_metric() {
  const RealPoly4 x1 = RealPoly4::variable(1);
  const RealPoly4 x2 = RealPoly4::variable(2);
  const RealPoly4 x3 = RealPoly4::variable(3);
  PolyMetric g;
  g[0][0] = RealPoly4(-1) - Rational(1, 2) * x1 * x1;
  g[1][1] = RealPoly4(-1);
  g[2][2] = RealPoly4(1);
  g[3][3] = RealPoly4(1);
  g[0][1] = Rational(1, 2) * x2 * x3;
  g[1][0] = g[0][1];
  return g;
}

inline MetricSampler sampler_of(const PolyMetric& g) {
  return [g](const Point& p) {
    Matrix4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = g[i][j].evaluate(p);
    return m;
  };
}

inline const PointQ kControlPoint{Rational(5, 2), Rational(1, 100), Rational(1, 50), Rational(3, 100)};

// Exact max |C_abcd| of the control metric at kControlPoint.
inline const Rational kControlWeyl{"277805556250000/1111222024990009", 10};

}  // namespace pqk::testing
