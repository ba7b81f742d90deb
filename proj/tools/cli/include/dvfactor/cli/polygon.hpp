#pragma once

#include <string>

#include "dvfactor/newton.hpp"

namespace dvfactor::cli {

/// "#points" then one "i<TAB>v(a_i)" line per nonzero coefficient, then
/// "#hull" and the lower-hull vertices in the same format.
std::string polygon_tsv(const ValuationProfile& profile);

/// Points, hull polyline, and axis labels. Byte-identical for equal input.
std::string polygon_svg(const ValuationProfile& profile, const std::string& title);

}  // namespace dvfactor::cli
