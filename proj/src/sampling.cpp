#include "pqk/sampling.hpp"

#include <stdexcept>

namespace pqk {

void Box::validate() const {
  for (std::size_t k = 0; k < 4; ++k)
    if (lower[k] > upper[k]) throw std::invalid_argument("box lower bound exceeds upper bound on axis " + std::to_string(k));
}

PointQ Box::center() const {
  PointQ c;
  for (std::size_t k = 0; k < 4; ++k) c[k] = (lower[k] + upper[k]) / 2;
  return c;
}

bool Box::contains(const PointQ& p) const {
  for (std::size_t k = 0; k < 4; ++k)
    if (p[k] < lower[k] || p[k] > upper[k]) return false;
  return true;
}

PointQ Box::at(const PointQ& unit) const {
  PointQ p;
  for (std::size_t k = 0; k < 4; ++k) p[k] = lower[k] + (upper[k] - lower[k]) * unit[k];
  return p;
}

std::vector<PointQ> Box::corners() const {
  std::vector<PointQ> out;
  out.reserve(16);
  for (unsigned mask = 0; mask < 16; ++mask) {
    PointQ p;
    for (std::size_t k = 0; k < 4; ++k) p[k] = (mask >> k) & 1U ? upper[k] : lower[k];
    out.push_back(std::move(p));
  }
  return out;
}

Rational radical_inverse(std::uint64_t index, unsigned base) {
  mpz_class num = 0;
  mpz_class den = 1;
  while (index > 0) {
    num = num * base + static_cast<unsigned long>(index % base);
    den *= base;
    index /= base;
  }
  // num / den = d0/b + d1/b^2 + ... for index = d0 + d1*b + ...
  Rational r(num, den);
  r.canonicalize();
  return r;
}

PointQ halton_point(std::uint64_t index) {
  return {radical_inverse(index, 2), radical_inverse(index, 3), radical_inverse(index, 5), radical_inverse(index, 7)};
}

std::vector<PointQ> sample_box(const Box& box, std::size_t count, std::uint64_t seed) {
  std::vector<PointQ> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(box.at(halton_point(seed + k + 1)));
  return out;
}

}  // namespace pqk
