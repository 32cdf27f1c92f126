#pragma once

#include <string>

#include "tridisc/developer.hpp"

namespace tridisc {

/// SVG 1.1 drawing of a developed disc. Lattice coordinates are converted
/// to floats only here, printed with 6 decimals under a fixed transform
/// (40 px per unit edge, 20 px margin, y axis pointing up).
std::string render_svg(const CombinatorialDisc& disc, const Development& dev);

}  // namespace tridisc
