#pragma once

#include <string>
#include <string_view>

#include "pqk/paraquaternion.hpp"

namespace pqk {

/// Parses `a+b*i1+c*i2+d*i3` with integer or `p/q` coefficients. Terms may
/// appear in any order or be omitted, a bare `i2` means coefficient 1, and
/// whitespace is ignored. Throws ParseError with the offending offset.
Paraquaternion parse_paraquaternion(std::string_view text);

/// Canonical printer: nonzero terms in basis order, `0` for zero.
/// `parse_paraquaternion(format(x)) == x` for every x.
std::string format(const Paraquaternion& x);

}  // namespace pqk
