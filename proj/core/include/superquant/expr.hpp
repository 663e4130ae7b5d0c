#pragma once

#include <string>

#include "superquant/freesuper.hpp"

namespace superquant {

/// Parse an element of the free superalgebra from text such as
/// `t1*t2*t1 - (q+q^-1)*t2*t1^2`. Generators are t1..ts (1-based), q is the
/// scalar variable, integers and fractions are scalars, ^ takes an integer
/// exponent (negative only on scalars). Throws ParseError.
FreeElem parse_element(const std::string& text, int rank, long unit_L);

}  // namespace superquant
