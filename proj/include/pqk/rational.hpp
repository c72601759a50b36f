#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pqk {

/// Exact scalar field. GMP keeps every value gcd-reduced with a positive
/// denominator.
using Rational = mpq_class;

/// Parses an integer (`-3`), a fraction (`3/2`) or a decimal literal
/// (`0.125`, `-1.5e-3`). Throws ParseError on anything else, including a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& q);

}  // namespace pqk
