#pragma once

#include <string>

#include "honey/breaking.hpp"
#include "honey/honeycomb.hpp"
#include "honey/moebius.hpp"

namespace honey {

// Deterministic SVG 1.1 picture of a honeycomb. The canvas x axis runs along
// (1,-1,0) and the canvas y axis along -(1,1,-2), scaled so a unit lattice
// step spans 40 canvas units. Edges are solid segments, vertices dots, and
// the boundary lines are dotted and annotated with their constant values.
// Decimals appear only here and are never read back.
std::string render_gl_svg(const GLHoneycomb& h);

// Moebius honeycombs draw the window vertices once; the wrap edges run from
// their tail to the seam image of their head, leaving the window. When a
// coloring is supplied, white vertices and edges of the fractional part are
// drawn hollow and gray.
std::string render_mh_svg(const MoebiusHoneycomb& h, const Coloring* coloring = nullptr);

}  // namespace honey
