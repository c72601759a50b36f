#include "pqk/pqmap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pqk/error.hpp"

namespace pqk {

PQPolyMap PQPolyMap::constant(const Paraquaternion& q) {
  return {RealPoly4(q.re), RealPoly4(q.im1), RealPoly4(q.im2), RealPoly4(q.im3)};
}

bool PQPolyMap::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const RealPoly4& p) { return p.is_zero(); });
}

int PQPolyMap::total_degree() const {
  int deg = -1;
  for (const auto& p : components) deg = std::max(deg, p.total_degree());
  return deg;
}

PQPolyMap& PQPolyMap::operator+=(const PQPolyMap& o) {
  for (std::size_t k = 0; k < 4; ++k) components[k] += o.components[k];
  return *this;
}

PQPolyMap& PQPolyMap::operator-=(const PQPolyMap& o) {
  for (std::size_t k = 0; k < 4; ++k) components[k] -= o.components[k];
  return *this;
}

PQPolyMap operator+(PQPolyMap a, const PQPolyMap& b) { return a += b; }
PQPolyMap operator-(PQPolyMap a, const PQPolyMap& b) { return a -= b; }

PQPolyMap operator*(const Rational& s, PQPolyMap a) {
  for (auto& p : a.components) p *= s;
  return a;
}

Paraquaternion evaluate(const PQPolyMap& f, const PointQ& x) {
  return {f[0].evaluate(x), f[1].evaluate(x), f[2].evaluate(x), f[3].evaluate(x)};
}

std::array<double, 4> evaluate(const PQPolyMap& f, const Point& x) {
  return {f[0].evaluate(x), f[1].evaluate(x), f[2].evaluate(x), f[3].evaluate(x)};
}

PQPolyMap partial(const PQPolyMap& f, int j) {
  return {f[0].partial(j), f[1].partial(j), f[2].partial(j), f[3].partial(j)};
}

PQPolyMap pointwise_mul(const PQPolyMap& f, const PQPolyMap& g) {
  const auto& [a0, a1, a2, a3] = f.components;
  const auto& [b0, b1, b2, b3] = g.components;
  return {
      a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
      a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
      a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
      a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
  };
}

namespace {

// d[j][k] = d_j f^k
using Jacobian = std::array<std::array<RealPoly4, 4>, 4>;

Jacobian jacobian(const PQPolyMap& f) {
  Jacobian d;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) d[j][k] = f[k].partial(j);
  return d;
}

}  // namespace

PQPolyMap d_left(const PQPolyMap& f) {
  const Jacobian d = jacobian(f);
  return {
      d[0][0] - d[1][1] + d[2][2] + d[3][3],
      d[1][0] + d[0][1] + d[3][2] - d[2][3],
      d[2][0] + d[3][1] + d[0][2] - d[1][3],
      d[3][0] - d[2][1] + d[1][2] + d[0][3],
  };
}

PQPolyMap d_right(const PQPolyMap& f) {
  const Jacobian d = jacobian(f);
  return {
      d[0][0] - d[1][1] + d[2][2] + d[3][3],
      d[1][0] + d[0][1] - d[3][2] + d[2][3],
      d[2][0] - d[3][1] + d[0][2] + d[1][3],
      d[3][0] + d[2][1] - d[1][2] + d[0][3],
  };
}

PQPolyMap lr_difference(const PQPolyMap& f) {
  const Jacobian d = jacobian(f);
  return {
      RealPoly4(),
      Rational(2) * (d[3][2] - d[2][3]),
      Rational(2) * (d[3][1] - d[1][3]),
      Rational(2) * (d[1][2] - d[2][1]),
  };
}

std::string to_string(Side side) { return side == Side::Left ? "left" : "right"; }

std::vector<int> RegularityVerdict::failing_equations() const {
  std::vector<int> out;
  for (int k = 0; k < 4; ++k)
    if (!residual[k].is_zero()) out.push_back(k);
  return out;
}

RegularityVerdict is_left_regular(const PQPolyMap& f) { return {Side::Left, d_left(f)}; }

RegularityVerdict is_right_regular(const PQPolyMap& f) { return {Side::Right, d_right(f)}; }

RegularityVerdict check_regularity(const PQPolyMap& f, Side side) {
  return side == Side::Left ? is_left_regular(f) : is_right_regular(f);
}

PQPolyMap fueter_zeta(int alpha) {
  if (alpha < 1 || alpha > 3) throw std::out_of_range("Fueter index must be 1, 2 or 3");
  PQPolyMap z;
  z[0] = RealPoly4::variable(alpha);
  z[alpha] = -RealPoly4::variable(0);
  return z;
}

PQPolyMap fueter_sum(std::span<const FueterTerm> terms) {
  PQPolyMap sum;
  if (terms.empty()) return sum;
  const Side side = terms.front().side;
  for (const auto& term : terms) {
    if (term.side != side) throw MixedSides("Fueter terms mix left and right coefficient placement");
    if (term.indices.empty()) throw EmptyFueterTerm("Fueter term needs at least one index");
  }
  std::array<PQPolyMap, 4> zeta;
  for (int a = 1; a <= 3; ++a) zeta[static_cast<std::size_t>(a)] = fueter_zeta(a);

  // Symmetrized products keyed by the sorted index string.
  std::map<std::vector<int>, PQPolyMap> cache;
  const auto symmetrized = [&](std::vector<int> indices) -> const PQPolyMap& {
    for (int a : indices)
      if (a < 1 || a > 3) throw std::out_of_range("Fueter index must be 1, 2 or 3");
    std::sort(indices.begin(), indices.end());
    auto [it, inserted] = cache.try_emplace(indices);
    if (!inserted) return it->second;
    PQPolyMap total;
    long count = 0;
    do {
      PQPolyMap product = zeta[static_cast<std::size_t>(indices.front())];
      for (std::size_t n = 1; n < indices.size(); ++n)
        product = pointwise_mul(product, zeta[static_cast<std::size_t>(indices[n])]);
      total += product;
      ++count;
    } while (std::next_permutation(indices.begin(), indices.end()));
    it->second = Rational(1, count) * total;
    return it->second;
  };

  for (const auto& term : terms) {
    const PQPolyMap& product = symmetrized(term.indices);
    const PQPolyMap coef = PQPolyMap::constant(term.coefficient);
    sum += side == Side::Left ? pointwise_mul(product, coef) : pointwise_mul(coef, product);
  }
  return sum;
}

PQPolyMap from_potential(const RealPoly4& f0, const RealPoly4& potential) {
  return {f0, potential.partial(1), potential.partial(2), potential.partial(3)};
}

}  // namespace pqk
