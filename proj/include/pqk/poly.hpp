#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>

#include "pqk/rational.hpp"

namespace pqk {

/// Point of R^4 with exact coordinates (x0, x1, x2, x3).
using PointQ = std::array<Rational, 4>;
/// Point of R^4 in floating point.
using Point = std::array<double, 4>;

Point to_double(const PointQ& p);

/// Exact polynomial in x0..x3 with rational coefficients. Terms are kept
/// sorted by exponent quadruple (lexicographic); zero coefficients are
/// never stored, so the zero polynomial has no terms.
class RealPoly4 {
 public:
  using Exponent = std::array<std::uint32_t, 4>;
  using Terms = std::map<Exponent, Rational>;

  RealPoly4() = default;
  // NOLINTNEXTLINE(google-explicit-constructor): constants embed.
  RealPoly4(const Rational& c);
  // NOLINTNEXTLINE(google-explicit-constructor)
  RealPoly4(long c) : RealPoly4(Rational(c)) {}

  static RealPoly4 monomial(const Exponent& e, const Rational& c = 1);
  /// The coordinate function x_j.
  static RealPoly4 variable(int j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  Rational coefficient(const Exponent& e) const;

  /// Adds c * x^e, merging with an existing term and dropping cancellations.
  void add_term(const Exponent& e, const Rational& c);

  RealPoly4& operator+=(const RealPoly4& o);
  RealPoly4& operator-=(const RealPoly4& o);
  RealPoly4& operator*=(const Rational& s);

  /// Formal partial derivative with respect to x_j.
  RealPoly4 partial(int j) const;

  Rational evaluate(const PointQ& p) const;
  double evaluate(const Point& p) const;

  friend bool operator==(const RealPoly4& a, const RealPoly4& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

RealPoly4 operator+(RealPoly4 a, const RealPoly4& b);
RealPoly4 operator-(RealPoly4 a, const RealPoly4& b);
RealPoly4 operator-(RealPoly4 a);
RealPoly4 operator*(const Rational& s, RealPoly4 a);
RealPoly4 operator*(const RealPoly4& a, const RealPoly4& b);

/// Human-readable rendering, e.g. `2*x0^2 - x1*x3 + 1/2`. Not a file format.
std::ostream& operator<<(std::ostream& os, const RealPoly4& p);

}  // namespace pqk
