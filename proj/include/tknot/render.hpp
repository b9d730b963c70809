#pragma once

#include <string>

#include "tknot/diagram.hpp"

namespace tknot {

// Drawing on the unit square with opposite sides identified. Each edge is
// one <g class="edge"> element.
std::string render_svg(const Diagram& d, int size_px = 400);

}  // namespace tknot
