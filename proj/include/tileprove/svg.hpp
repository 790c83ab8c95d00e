#pragma once

#include <string>

#include "tileprove/tiling.hpp"

namespace tileprove {

/// Renders one polygon per tile (double-precision coordinates, Cartesian
/// embedding of the affine basis).  When with_coloring is set and the tiling
/// satisfies the coloring hypotheses, tiles are filled black/white.
/// Throws std::runtime_error on I/O failure.
void to_svg(const Tiling& t, const std::string& path, bool with_coloring = false);

std::string svg_string(const Tiling& t, bool with_coloring = false);

}  // namespace tileprove
