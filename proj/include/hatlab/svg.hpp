#pragma once

#include <optional>
#include <string>

#include "hatlab/tiler.hpp"

namespace hatlab {

enum class ColorBy { chirality, ring };

std::optional<ColorBy> parse_color_by(const std::string& text);

/// One closed path per hat, outline corners only, in placement order.
/// Coordinates are exact lattice values rounded to 4 decimals, y pointing
/// down, in units where a short kite edge is sqrt 3.
std::string render_svg(const Patch& patch, ColorBy color_by);

}  // namespace hatlab
