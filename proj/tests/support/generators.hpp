#pragma once

// Random exact inputs for property tests. Everything is driven by an
// explicit std::mt19937_64 so failures reproduce from the seed.

#include <random>
#include <vector>

#include "pqk/paraquaternion.hpp"
#include "pqk/pqmap.hpp"

namespace pqk::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 9, int max_den = 9) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Paraquaternion random_pq(Rng& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline PointQ random_point(Rng& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

/// Up to `max_terms` monomials of total degree <= max_degree.
inline RealPoly4 random_poly(Rng& rng, int max_degree, int max_terms = 6) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> var(0, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  RealPoly4 p;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    RealPoly4::Exponent e{0, 0, 0, 0};
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(var(rng))];
    p.add_term(e, random_rational(rng));
  }
  return p;
}

inline PQPolyMap random_map(Rng& rng, int max_degree, int max_terms = 6) {
  return {random_poly(rng, max_degree, max_terms), random_poly(rng, max_degree, max_terms),
          random_poly(rng, max_degree, max_terms), random_poly(rng, max_degree, max_terms)};
}

inline PQPolyMap random_imaginary_map(Rng& rng, int max_degree, int max_terms = 6) {
  PQPolyMap f = random_map(rng, max_degree, max_terms);
  f[0] = RealPoly4();
  return f;
}

/// 1..max_terms Fueter terms with index strings of length 1..max_length.
inline std::vector<FueterTerm> random_fueter_terms(Rng& rng, Side side, int max_length, int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<int> index(1, 3);
  std::vector<FueterTerm> terms(static_cast<std::size_t>(count(rng)));
  for (auto& t : terms) {
    t.side = side;
    t.indices.resize(static_cast<std::size_t>(length(rng)));
    for (auto& i : t.indices) i = index(rng);
    t.coefficient = random_pq(rng);
  }
  return terms;
}

}  // namespace pqk::testing
