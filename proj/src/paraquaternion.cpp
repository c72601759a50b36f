#include "pqk/paraquaternion.hpp"

#include <cmath>
#include <stdexcept>

#include "pqk/error.hpp"
#include "pqk/text.hpp"

namespace pqk {

Paraquaternion Paraquaternion::basis(int index) {
  switch (index) {
    case 0: return one();
    case 1: return i1();
    case 2: return i2();
    case 3: return i3();
    default: throw std::out_of_range("paraquaternion basis index");
  }
}

const Rational& Paraquaternion::operator[](int index) const {
  switch (index) {
    case 0: return re;
    case 1: return im1;
    case 2: return im2;
    case 3: return im3;
    default: throw std::out_of_range("paraquaternion component index");
  }
}

Rational& Paraquaternion::operator[](int index) {
  return const_cast<Rational&>(std::as_const(*this)[index]);
}

Paraquaternion& Paraquaternion::operator+=(const Paraquaternion& o) {
  re += o.re;
  im1 += o.im1;
  im2 += o.im2;
  im3 += o.im3;
  return *this;
}

Paraquaternion& Paraquaternion::operator-=(const Paraquaternion& o) {
  re -= o.re;
  im1 -= o.im1;
  im2 -= o.im2;
  im3 -= o.im3;
  return *this;
}

Paraquaternion& Paraquaternion::operator*=(const Rational& s) {
  re *= s;
  im1 *= s;
  im2 *= s;
  im3 *= s;
  return *this;
}

Paraquaternion operator+(Paraquaternion a, const Paraquaternion& b) { return a += b; }
Paraquaternion operator-(Paraquaternion a, const Paraquaternion& b) { return a -= b; }
Paraquaternion operator-(const Paraquaternion& a) { return {-a.re, -a.im1, -a.im2, -a.im3}; }
Paraquaternion operator*(const Rational& s, Paraquaternion a) { return a *= s; }

Paraquaternion mul(const Paraquaternion& x, const Paraquaternion& y) {
  return {
      x.re * y.re - x.im1 * y.im1 + x.im2 * y.im2 + x.im3 * y.im3,
      x.re * y.im1 + x.im1 * y.re - x.im2 * y.im3 + x.im3 * y.im2,
      x.re * y.im2 - x.im1 * y.im3 + x.im2 * y.re + x.im3 * y.im1,
      x.re * y.im3 + x.im1 * y.im2 - x.im2 * y.im1 + x.im3 * y.re,
  };
}

Paraquaternion operator*(const Paraquaternion& x, const Paraquaternion& y) { return mul(x, y); }

Paraquaternion conjugate(const Paraquaternion& x) { return {x.re, -x.im1, -x.im2, -x.im3}; }

Rational normsq(const Paraquaternion& x) {
  return x.re * x.re + x.im1 * x.im1 - x.im2 * x.im2 - x.im3 * x.im3;
}

NormValue norm(const Paraquaternion& x) {
  const Rational n = normsq(x);
  NormValue v;
  v.magnitude_squared = abs(n);
  v.magnitude = std::sqrt(v.magnitude_squared.get_d());
  if (n > 0) {
    v.kind = NormKind::Real;
  } else if (n < 0) {
    v.kind = NormKind::Imaginary;
  }
  return v;
}

Paraquaternion inverse(const Paraquaternion& x) {
  const Rational n = normsq(x);
  if (n == 0) throw NotInvertible("paraquaternion " + format(x) + " has zero norm");
  return Rational(1 / n) * conjugate(x);
}

ElementClass classify(const Paraquaternion& x) {
  const Rational n = normsq(x);
  const Paraquaternion sq = mul(x, x);
  ElementClass c;
  c.invertible = n != 0;
  c.zero_divisor = !x.is_zero() && n == 0;
  c.nilpotent = !x.is_zero() && sq.is_zero();
  c.idempotent = sq == x;
  return c;
}

Matrix2 to_matrix(const Paraquaternion& x) {
  return {{{x.re - x.im3, -x.im1 + x.im2}, {x.im1 + x.im2, x.re + x.im3}}};
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Rational determinant(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

std::ostream& operator<<(std::ostream& os, const Paraquaternion& x) { return os << format(x); }

}  // namespace pqk
