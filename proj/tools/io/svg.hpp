#pragma once

#include "mukai/walls.hpp"

#include <string>
#include <vector>

namespace mukai {

// SVG 1.1 document with one element per wall, in input order. The viewBox is
// "-2 0 4 2" in (b,a)-coordinates; scale only sets the pixel size. No
// timestamps, fixed decimal formatting: byte-identical across runs.
std::string walls_svg(const std::vector<Wall>& walls, long long scale = 100);

} // namespace mukai
