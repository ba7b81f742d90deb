#pragma once

#include <string>

#include "dvfactor/poly.hpp"

namespace dvfactor {

/// Descending powers with explicit '*' and '^', e.g. "x^5 + 32*x^2 + 4*x + 8".
/// The output re-parses to the same polynomial.
std::string to_string(const IntPoly& f, char var = 'x');

/// "y^5 + (x^2 + x + 1)*y + x^2 + 1"
std::string to_string(const BiPoly& f);

}  // namespace dvfactor
