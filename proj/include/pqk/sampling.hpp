#pragma once

#include <cstdint>
#include <vector>

#include "pqk/poly.hpp"

namespace pqk {

/// Axis-aligned box [lower_k, upper_k] in R^4 with exact endpoints.
struct Box {
  PointQ lower;
  PointQ upper;

  /// Throws std::invalid_argument unless lower_k <= upper_k on every axis.
  void validate() const;
  PointQ center() const;
  bool contains(const PointQ& p) const;
  /// Maps u in [0,1]^4 onto the box.
  PointQ at(const PointQ& unit) const;
  std::vector<PointQ> corners() const;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Radical inverse of `index` in `base`, exactly.
Rational radical_inverse(std::uint64_t index, unsigned base);

/// Halton point in [0,1)^4 (bases 2, 3, 5, 7).
PointQ halton_point(std::uint64_t index);

/// `count` low-discrepancy points in the box. Point k uses Halton index
/// seed + k + 1, so the same seed always yields the same points.
std::vector<PointQ> sample_box(const Box& box, std::size_t count, std::uint64_t seed = 0);

}  // namespace pqk
