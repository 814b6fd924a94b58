#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sg/rational.hpp"
#include "sg/sliced.hpp"

namespace sg {

// Axis-parallel segment with exact endpoints, ordered along the direction of
// travel (the edge's orientation runs from a to b).
struct Seg {
  Vec2 a, b;
  std::string edge;
  bool wrap = false;  // part of a wrapping path
  bool vertical() const { return a.x == b.x; }
  bool horizontal() const { return a.y == b.y; }
  bool travels_up() const { return vertical() && a.y < b.y; }
};

// Small descending fan at a vertex; attach points sit on the event's own
// rows, strictly inside the gap between the neighbouring strand columns.
struct Fan {
  struct Slot {
    Vec2 attach;
    std::string edge;
  };
  std::string vertex;
  Vec2 p;
  std::vector<Slot> ins, outs;  // left to right
};

struct LayoutCrossing {
  Vec2 p;
  int h_seg = -1;  // horizontal segment index
  int v_seg = -1;  // vertical segment index
  bool horizontal_over = true;
};

struct RectLayout {
  std::vector<Seg> segs;
  std::vector<Fan> fans;
  std::vector<LayoutCrossing> crossings;
  std::set<Rat> used_cols, used_rows;

  bool annular = false;
  Vec2 origin;
  int wrap_count = 0;

  Rat fresh_col_between(std::optional<Rat> lo, std::optional<Rat> hi);
  Rat fresh_row_between(std::optional<Rat> lo, std::optional<Rat> hi);
};

// Realizes the sliced diagram with vertical strands, horizontal jogs at
// crossings (the over strand jogs, so every crossing is horizontal-over) and
// descending vertex fans.
RectLayout rectilinear_layout(const SlicedDiagram& s);

// Walks any vertical-over crossing's vertical strand around the far end of
// the horizontal it crossed; afterwards every crossing is horizontal-over.
RectLayout normalize_crossings(RectLayout l);

// Moves every upward vertical run onto a column of its own, away from any
// fan; returns indices of the up segments sorted by column.
RectLayout isolate_up_columns(RectLayout l);
std::vector<int> up_segments(const RectLayout& l);  // sorted by column

// Replaces each upward run by the three remaining sides of a nested upright
// rectangle, passing under every horizontal met, and fixes the origin so the
// positive-x seam meets exactly the rectangle right sides.
RectLayout wrap_up_segments(RectLayout l);

// Structural checks: axis-parallel, transverse interior crossings only, no
// collinear overlaps or T-junctions, fans descend.  Throws on violation.
void validate_layout(const RectLayout& l);

// True iff every segment's angle about the origin strictly increases along
// its direction of travel (horizontals read as tilted slightly downward).
bool monotone_certificate(const RectLayout& l);

}  // namespace sg
