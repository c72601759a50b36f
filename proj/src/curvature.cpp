#include "pqk/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pqk/error.hpp"

namespace pqk {
namespace {

// Gamma[a][b][c] = Gamma^a_bc
using Christoffel = std::array<std::array<std::array<double, 4>, 4>, 4>;

Matrix4 checked_inverse(const Matrix4& g) {
  Eigen::FullPivLU<Matrix4> lu(g);
  if (!lu.isInvertible() || !g.allFinite()) throw SingularMetric("sampled metric is not invertible");
  return lu.inverse();
}

Point shifted(Point p, int axis, double delta) {
  p[static_cast<std::size_t>(axis)] += delta;
  return p;
}

Christoffel christoffel(const MetricSampler& metric, const Point& p, double step) {
  const Matrix4 g_inv = checked_inverse(metric(p));
  std::array<Matrix4, 4> dg;
  for (int k = 0; k < 4; ++k)
    dg[k] = (metric(shifted(p, k, step)) - metric(shifted(p, k, -step))) / (2.0 * step);

  Christoffel gamma{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int d = 0; d < 4; ++d) s += g_inv(a, d) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
        gamma[a][b][c] = 0.5 * s;
      }
  return gamma;
}

double max_abs(const Tensor4& t) {
  double m = 0.0;
  for (const auto& x : t)
    for (const auto& y : x)
      for (const auto& z : y)
        for (double v : z) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

Tensor4 weyl_from_riemann(const Matrix4& g, const Tensor4& riemann) {
  const Matrix4 g_inv = checked_inverse(g);
  Matrix4 ricci = Matrix4::Zero();
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d)
      for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) ricci(b, d) += g_inv(a, c) * riemann[a][b][c][d];
  const double scalar = (g_inv.array() * ricci.array()).sum();

  Tensor4 weyl{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const double ric_part =
              g(a, c) * ricci(b, d) - g(a, d) * ricci(b, c) - g(b, c) * ricci(a, d) + g(b, d) * ricci(a, c);
          const double scalar_part = g(a, c) * g(b, d) - g(a, d) * g(b, c);
          weyl[a][b][c][d] = riemann[a][b][c][d] - 0.5 * ric_part + scalar / 6.0 * scalar_part;
        }
  return weyl;
}

CurvatureSample curvature_numeric(const MetricSampler& metric, const Point& point, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const Matrix4 g = metric(point);
  checked_inverse(g);
  const Christoffel gamma = christoffel(metric, point, step);

  // dgamma[k][a][b][c] = d_k Gamma^a_bc
  std::array<Christoffel, 4> dgamma;
  for (int k = 0; k < 4; ++k) {
    const Christoffel plus = christoffel(metric, shifted(point, k, step), step);
    const Christoffel minus = christoffel(metric, shifted(point, k, -step), step);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) dgamma[k][a][b][c] = (plus[a][b][c] - minus[a][b][c]) / (2.0 * step);
  }

  // R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb + Gamma^a_ce Gamma^e_db - Gamma^a_de Gamma^e_cb
  Tensor4 mixed{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double r = dgamma[c][a][d][b] - dgamma[d][a][c][b];
          for (int e = 0; e < 4; ++e) r += gamma[a][c][e] * gamma[e][d][b] - gamma[a][d][e] * gamma[e][c][b];
          mixed[a][b][c][d] = r;
        }

  CurvatureSample out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double r = 0.0;
          for (int e = 0; e < 4; ++e) r += g(a, e) * mixed[e][b][c][d];
          out.riemann[a][b][c][d] = r;
        }
  out.weyl = weyl_from_riemann(g, out.riemann);
  out.max_riemann = max_abs(out.riemann);
  out.max_weyl = max_abs(out.weyl);
  return out;
}

double weyl_numeric(const MetricSampler& metric, const Point& point, double step) {
  return curvature_numeric(metric, point, step).max_weyl;
}

}  // namespace pqk
