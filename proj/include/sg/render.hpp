#pragma once

#include <string>

#include "sg/layout.hpp"
#include "sg/sliced.hpp"

namespace sg {

// SVG drawing of a rectilinear layout: strands with a fixed-width gap on the
// under side of each crossing, an arrowhead at 60% of each segment, vertex
// dots with id labels.
std::string render_svg(const RectLayout& l);

// Convenience: lay the diagram out (optionally through the whole braiding
// pipeline to the annular form) and render it.
std::string render_svg(const SlicedDiagram& s, bool annular = false);

}  // namespace sg
