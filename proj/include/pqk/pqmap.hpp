#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "pqk/paraquaternion.hpp"
#include "pqk/poly.hpp"

namespace pqk {

/// Polynomial map R^4 -> A, f = f0 + f1*i1 + f2*i2 + f3*i3.
struct PQPolyMap {
  std::array<RealPoly4, 4> components;

  PQPolyMap() = default;
  PQPolyMap(RealPoly4 f0, RealPoly4 f1, RealPoly4 f2, RealPoly4 f3)
      : components{std::move(f0), std::move(f1), std::move(f2), std::move(f3)} {}

  /// The map x -> q.
  static PQPolyMap constant(const Paraquaternion& q);

  const RealPoly4& operator[](int k) const { return components.at(static_cast<std::size_t>(k)); }
  RealPoly4& operator[](int k) { return components.at(static_cast<std::size_t>(k)); }

  bool is_zero() const;
  int total_degree() const;

  PQPolyMap& operator+=(const PQPolyMap& o);
  PQPolyMap& operator-=(const PQPolyMap& o);

  friend bool operator==(const PQPolyMap&, const PQPolyMap&) = default;
};

PQPolyMap operator+(PQPolyMap a, const PQPolyMap& b);
PQPolyMap operator-(PQPolyMap a, const PQPolyMap& b);
PQPolyMap operator*(const Rational& s, PQPolyMap a);

Paraquaternion evaluate(const PQPolyMap& f, const PointQ& x);
/// Floating-point evaluation; components in basis order (1, i1, i2, i3).
std::array<double, 4> evaluate(const PQPolyMap& f, const Point& x);

PQPolyMap partial(const PQPolyMap& f, int j);

/// (f g)(x) = f(x) g(x), expanded with the paraquaternion product.
PQPolyMap pointwise_mul(const PQPolyMap& f, const PQPolyMap& g);

/// D_L f = d0 f + sum_a i_a (d_a f).
PQPolyMap d_left(const PQPolyMap& f);
/// D_R f = d0 f + sum_a (d_a f) i_a.
PQPolyMap d_right(const PQPolyMap& f);

/// D_L f - D_R f, assembled from the three curl expressions of (f1, f2, f3).
/// The real part is always zero.
PQPolyMap lr_difference(const PQPolyMap& f);

enum class Side { Left, Right };

std::string to_string(Side side);

/// Result of a regularity check. The residual is D_L f (or D_R f); its four
/// components are the four equations of the Cauchy-Fueter system.
struct RegularityVerdict {
  Side side = Side::Left;
  PQPolyMap residual;

  bool is_regular() const { return residual.is_zero(); }
  /// Indices 0..3 of the equations that fail.
  std::vector<int> failing_equations() const;
};

RegularityVerdict is_left_regular(const PQPolyMap& f);
RegularityVerdict is_right_regular(const PQPolyMap& f);
RegularityVerdict check_regularity(const PQPolyMap& f, Side side);

/// Fueter polynomial zeta_alpha(x) = x_alpha - x0 * i_alpha, alpha in 1..3.
PQPolyMap fueter_zeta(int alpha);

/// One summand of a truncated Fueter series. The indices name the symmetrized
/// product of zeta factors: the average of zeta_{a1} ... zeta_{ak} over the
/// distinct orderings of the index string, so the order given does not
/// matter. A single ordered product such as zeta_1 zeta_2 is not regular.
/// For Side::Left the coefficient multiplies on the right, for Side::Right on
/// the left.
struct FueterTerm {
  std::vector<int> indices;
  Paraquaternion coefficient;
  Side side = Side::Left;
};

/// Sums the terms. The result is left-regular for Side::Left terms and
/// right-regular for Side::Right terms. Throws MixedSides if the sides
/// disagree and EmptyFueterTerm for an empty index string.
PQPolyMap fueter_sum(std::span<const FueterTerm> terms);

/// The map with real part f0 and f_a = d_a F; D_L and D_R agree on it.
PQPolyMap from_potential(const RealPoly4& f0, const RealPoly4& potential);

}  // namespace pqk
