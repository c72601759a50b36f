#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>

#include "pqk/poly.hpp"

namespace pqk {

using Matrix4 = Eigen::Matrix4d;

/// Metric components g_ij as a function of the point.
using MetricSampler = std::function<Matrix4(const Point&)>;

/// All-lower rank-4 tensor T_abcd.
using Tensor4 = std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4>;

struct CurvatureSample {
  Tensor4 riemann{};  // R_abcd
  Tensor4 weyl{};     // C_abcd
  double max_riemann = 0.0;
  double max_weyl = 0.0;
};

/// Curvature of a 4-dimensional metric at `point` by second-order central
/// differences: Christoffel symbols from differences of g, then the Riemann
/// tensor from differences of the Christoffel symbols sampled at
/// point +- step * e_k. The stencil reaches 2 * step along each axis.
/// Throws SingularMetric when a sampled metric is not invertible.
CurvatureSample curvature_numeric(const MetricSampler& metric, const Point& point, double step);

/// max_abcd |C_abcd| from curvature_numeric.
double weyl_numeric(const MetricSampler& metric, const Point& point, double step);

/// Weyl tensor of a 4-dimensional metric from its Riemann tensor:
/// C = R - 1/2 (g o Ric) + R/6 (g o g) with the Kulkarni-Nomizu pattern.
Tensor4 weyl_from_riemann(const Matrix4& g, const Tensor4& riemann);

}  // namespace pqk
