#pragma once

#include <string>

#include "sectorpack/region.hpp"

namespace sectorpack {

/// SVG rendering of the enumeration order: lattice dots labeled with their
/// polynomial values and a polyline visiting values 0..count in order.
/// Mathematical y-up layout, 24px unit cells, fixed margins; output is
/// byte-identical across runs.  Throws when a value in 0..count is missing
/// or collides inside the window.
std::string render_enumeration_svg(const IVQuadratic& p, const Sector& sector, const Int& count);

} // namespace sectorpack
