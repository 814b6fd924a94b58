#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sg/moves.hpp"
#include "sg/sliced.hpp"
#include "sg/smoothing.hpp"

namespace sg {

struct MinimizeResult {
  SlicedDiagram best;
  int mu = 0;
  std::size_t visited = 0;
  bool exhausted_budget = false;
  int depth_reached = 0;
};

// Breadth-first search over move applications, deduplicated by the
// serialized event list, bounded by `budget` visited diagrams and `depth`
// moves.  Returns a reachable diagram minimizing the smoothing's component
// count; deterministic for fixed inputs.
MinimizeResult minimize_smoothing(const SlicedDiagram& s, std::size_t budget, int depth);

// Inserts one hooking crossing per assignment between a tree component
// (named by any of its vertices) and a target edge outside all listed trees.
// Each hook needs a row where strands of the two meet side by side; the tree
// strand passes under.
SlicedDiagram hook_trees(const SlicedDiagram& s,
                         const std::vector<std::pair<std::string, std::string>>& assignments);

struct BoundsReport {
  int s_lower = 0;
  bool s_exact = false;  // the lower bound is attained by every embedding
  int s_upper = 0;
  int b_upper = 0;
  int b_lower = 1;
  std::vector<std::string> notes;
};

struct BridgeOracleEntry {
  std::vector<std::string> cycle;
  int bridge = 1;  // externally supplied bridge index of the cycle's knot
};

BoundsReport s_bounds(const SlicedDiagram& s, std::size_t budget, int depth);
BoundsReport b_bounds(const SlicedDiagram& s, const std::vector<BridgeOracleEntry>& oracle);
BoundsReport bounds(const SlicedDiagram& s, std::size_t budget, int depth,
                    const std::vector<BridgeOracleEntry>& oracle);

struct CirculatingCertificate {
  int bound = 0;      // b_cycle_lower + chi(G), a lower bound for mu(S(D))
  bool vacuous = false;  // bound < 1 certifies nothing beyond mu >= 1
  int mu = 0;         // mu(S(D)) of the given diagram, for the machine check
};

// Lower bound on mu(S(D)) for a circulating graph from an externally
// justified braid-index bound for the link containing the given cycle.
CirculatingCertificate s_certificate_circulating(const SlicedDiagram& s,
                                                 const std::vector<std::string>& cycle,
                                                 int b_cycle_lower);

}  // namespace sg
