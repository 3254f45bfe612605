#pragma once

#include <string>
#include <vector>

#include "isoprod/surface.hpp"

namespace isoprod {

/// Identifiers of the built-in surfaces: "z2^3", "z2^4", "z3^2", "z5^2".
std::vector<std::string> preset_labels();

/// Branch data for the built-in surfaces, one admissible generating-vector
/// choice per group type. All downstream numerical data depends only on
/// orbit degrees and class-group shapes.
ProductQuotientSurface make_preset(const std::string& label);

}  // namespace isoprod
