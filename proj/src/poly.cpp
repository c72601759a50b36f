#include "pqk/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace pqk {

Point to_double(const PointQ& p) { return {p[0].get_d(), p[1].get_d(), p[2].get_d(), p[3].get_d()}; }

RealPoly4::RealPoly4(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0, 0, 0}, c);
}

RealPoly4 RealPoly4::monomial(const Exponent& e, const Rational& c) {
  RealPoly4 p;
  p.add_term(e, c);
  return p;
}

RealPoly4 RealPoly4::variable(int j) {
  if (j < 0 || j > 3) throw std::out_of_range("coordinate index");
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(j)] = 1;
  return monomial(e);
}

int RealPoly4::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(e[0] + e[1] + e[2] + e[3]));
  return deg;
}

Rational RealPoly4::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RealPoly4::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

RealPoly4& RealPoly4::operator+=(const RealPoly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RealPoly4& RealPoly4::operator-=(const RealPoly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RealPoly4& RealPoly4::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

RealPoly4 RealPoly4::partial(int j) const {
  if (j < 0 || j > 3) throw std::out_of_range("coordinate index");
  const auto k = static_cast<std::size_t>(j);
  RealPoly4 d;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent de = e;
    --de[k];
    d.terms_.emplace_hint(d.terms_.end(), de, c * e[k]);
  }
  return d;
}

namespace {

template <typename Scalar, typename PointT>
Scalar evaluate_terms(const RealPoly4::Terms& terms, const PointT& p) {
  std::array<std::uint32_t, 4> max_exp{0, 0, 0, 0};
  for (const auto& [e, c] : terms)
    for (std::size_t k = 0; k < 4; ++k) max_exp[k] = std::max(max_exp[k], e[k]);
  std::array<std::vector<Scalar>, 4> powers;
  for (std::size_t k = 0; k < 4; ++k) {
    powers[k].resize(max_exp[k] + 1);
    powers[k][0] = Scalar(1);
    for (std::uint32_t n = 1; n <= max_exp[k]; ++n) powers[k][n] = powers[k][n - 1] * p[k];
  }
  Scalar sum(0);
  for (const auto& [e, c] : terms) {
    Scalar term;
    if constexpr (std::is_same_v<Scalar, double>) {
      term = c.get_d();
    } else {
      term = c;
    }
    for (std::size_t k = 0; k < 4; ++k)
      if (e[k] != 0) term *= powers[k][e[k]];
    sum += term;
  }
  return sum;
}

}  // namespace

Rational RealPoly4::evaluate(const PointQ& p) const { return evaluate_terms<Rational>(terms_, p); }

double RealPoly4::evaluate(const Point& p) const { return evaluate_terms<double>(terms_, p); }

RealPoly4 operator+(RealPoly4 a, const RealPoly4& b) { return a += b; }
RealPoly4 operator-(RealPoly4 a, const RealPoly4& b) { return a -= b; }
RealPoly4 operator-(RealPoly4 a) { return a *= Rational(-1); }
RealPoly4 operator*(const Rational& s, RealPoly4 a) { return a *= s; }

RealPoly4 operator*(const RealPoly4& a, const RealPoly4& b) {
  RealPoly4 r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
  return r;
}

std::ostream& operator<<(std::ostream& os, const RealPoly4& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = e == RealPoly4::Exponent{0, 0, 0, 0};
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << "*";
      os << "x" << k;
      if (e[k] > 1) os << "^" << e[k];
      wrote = true;
    }
  }
  return os;
}

}  // namespace pqk
