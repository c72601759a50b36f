#pragma once

#include <array>
#include <ostream>
#include <utility>

#include "pqk/rational.hpp"

namespace pqk {

/// Element re + im1*i1 + im2*i2 + im3*i3 of the paraquaternion (split
/// quaternion) algebra, where i1^2 = -1, i2^2 = i3^2 = 1 and i1*i2 = i3.
struct Paraquaternion {
  Rational re;
  Rational im1;
  Rational im2;
  Rational im3;

  Paraquaternion() = default;
  Paraquaternion(Rational r, Rational a, Rational b, Rational c)
      : re(std::move(r)), im1(std::move(a)), im2(std::move(b)), im3(std::move(c)) {}
  // NOLINTNEXTLINE(google-explicit-constructor): scalars embed as re.
  Paraquaternion(const Rational& r) : re(r) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  Paraquaternion(long r) : re(r) {}

  static Paraquaternion one() { return {1, 0, 0, 0}; }
  static Paraquaternion i1() { return {0, 1, 0, 0}; }
  static Paraquaternion i2() { return {0, 0, 1, 0}; }
  static Paraquaternion i3() { return {0, 0, 0, 1}; }
  /// Basis element by index: 0 -> 1, 1..3 -> i1..i3.
  static Paraquaternion basis(int index);

  /// Coefficient by index: 0 -> re, 1..3 -> im1..im3.
  const Rational& operator[](int index) const;
  Rational& operator[](int index);

  bool is_zero() const { return re == 0 && im1 == 0 && im2 == 0 && im3 == 0; }

  Paraquaternion& operator+=(const Paraquaternion& o);
  Paraquaternion& operator-=(const Paraquaternion& o);
  Paraquaternion& operator*=(const Rational& s);

  friend bool operator==(const Paraquaternion& a, const Paraquaternion& b) {
    return a.re == b.re && a.im1 == b.im1 && a.im2 == b.im2 && a.im3 == b.im3;
  }
};

Paraquaternion operator+(Paraquaternion a, const Paraquaternion& b);
Paraquaternion operator-(Paraquaternion a, const Paraquaternion& b);
Paraquaternion operator-(const Paraquaternion& a);
Paraquaternion operator*(const Rational& s, Paraquaternion a);
Paraquaternion operator*(const Paraquaternion& x, const Paraquaternion& y);

Paraquaternion mul(const Paraquaternion& x, const Paraquaternion& y);
Paraquaternion conjugate(const Paraquaternion& x);

/// x * conj(x) = (x0)^2 + (x1)^2 - (x2)^2 - (x3)^2.
Rational normsq(const Paraquaternion& x);

enum class NormKind { Zero, Real, Imaginary };

/// sqrt(x * conj(x)). A negative normsq lands on the positive imaginary
/// axis and is stored as its magnitude tagged Imaginary.
struct NormValue {
  double magnitude = 0.0;
  NormKind kind = NormKind::Zero;
  Rational magnitude_squared;  // |normsq|, exact
};

NormValue norm(const Paraquaternion& x);

/// conj(x) / normsq(x). Throws NotInvertible when normsq(x) == 0.
Paraquaternion inverse(const Paraquaternion& x);

/// Overlapping element classes; idempotents other than 0 and 1 are also
/// zero divisors.
struct ElementClass {
  bool invertible = false;
  bool zero_divisor = false;
  bool nilpotent = false;
  bool idempotent = false;

  friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

ElementClass classify(const Paraquaternion& x);

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

/// Real 2x2 representation with i1 -> [[0,-1],[1,0]], i2 -> [[0,1],[1,0]],
/// i3 -> [[-1,0],[0,1]].
Matrix2 to_matrix(const Paraquaternion& x);

Matrix2 operator+(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Rational determinant(const Matrix2& m);

std::ostream& operator<<(std::ostream& os, const Paraquaternion& x);

}  // namespace pqk
