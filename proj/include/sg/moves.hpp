#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sg/sliced.hpp"

namespace sg {

// One applicable rewriting of the event list.  Every move preserves validity,
// the labeled underlying graph, and the isotopy class of the diagram.
struct MoveInstance {
  enum class Kind {
    Exchange,      // commute two events acting on disjoint position ranges
    MinMaxCancel,  // remove an adjacent zigzag pair
    MinMaxAdd,     // insert a zigzag on a strand
    R1Remove,      // remove a kink (max, cross, min)
    R1Add,
    R2Remove,      // cancel an adjacent crossing pair
    R2Add,
    R3,            // slide a strand across a crossing
    R4Slide,       // slide a strand past a vertex, over or under
    R5Twist,       // absorb a crossing of adjacent strands into the vertex
  };
  Kind kind;
  int at = 0;    // event index (rewrites) or event gap (insertions)
  int pos = 1;   // row position parameter for insertions
  int form = 0;  // variant selector; meaning depends on the kind
};

std::string move_kind_name(MoveInstance::Kind k);

// Applies the move; returns nothing if the instance does not fit the diagram.
std::optional<SlicedDiagram> apply_move(const SlicedDiagram& s, const MoveInstance& m);

// Complete list of applicable instances of the declared kinds, in a fixed
// deterministic order.  Every returned instance applies successfully and
// yields a valid diagram with the same labeled graph.
std::vector<MoveInstance> enumerate_moves(const SlicedDiagram& s);

}  // namespace sg
