#pragma once

#include <optional>
#include <string>

#include "triblock/geometry.hpp"

namespace triblock {

// Standalone 800x800 SVG of the polygon and its diagonal set: vertex 0 sits
// at the top and indices run counterclockwise.  Blocker edges are drawn
// bold; when `overlay` is given (a witness triangulation), its edges are
// drawn underneath in gray.  Output is byte-deterministic for equal input.
std::string render_svg(const EdgeSet& b, const std::optional<EdgeSet>& overlay = std::nullopt);

}  // namespace triblock
