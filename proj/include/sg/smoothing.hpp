#pragma once

#include <string>
#include <vector>

#include "sg/sliced.hpp"

namespace sg {

// Abstract 1-complex produced by resolving every crossing compatibly with
// edge orientations.  Nodes are the retained graph vertices plus one anchor
// per free circle, so chi = nodes - arcs holds componentwise.
struct SmoothedComplex {
  int nodes = 0;
  int arcs = 0;
  int free_circles = 0;                 // circles that got an anchor node
  std::vector<int> component_of_node;   // node -> component id (0-based, dense)
  int components = 0;
};

struct ComplexStats {
  int mu = 0;     // connected components
  int chi = 0;    // nodes - arcs
  int beta1 = 0;  // mu - chi
};

struct SmoothingReport {
  int mu = 0;
  int chi_graph = 0;
  int beta1 = 0;
  bool prop_ok = false;        // mu >= chi(G); must hold for every valid diagram
  bool chi_preserved = false;  // chi(S(D)) == chi(G); must hold as well
};

SmoothedComplex smooth(const SlicedDiagram& s);
ComplexStats complex_stats(const SmoothedComplex& x);
SmoothingReport smoothing_report(const SlicedDiagram& s);

// Replaces every vertex neighbourhood by parallel arcs; at vertices on the
// given directed cycle, leftover transversal strands are split off passing
// under the cycle.  The result is a diagram of an oriented link (every vertex
// 2-valent), with the cycle surviving as one component.
SlicedDiagram cycle_reduction(const SlicedDiagram& s, const std::vector<std::string>& cycle);

struct ReductionCheck {
  int mu_before = 0;       // mu(S(D))
  int mu_after = 0;        // mu(S(D'))
  int indeg_excess = 0;    // sum over vertices of (indeg - 1)
  int chi_graph = 0;
  bool inequality_ok = false;   // mu_before >= mu_after - indeg_excess
  bool handshake_ok = false;    // indeg_excess == -chi(G)
  int added_crossings = 0;
  int events_before = 0, events_after = 0;
};

ReductionCheck reduction_inequality_check(const SlicedDiagram& s,
                                          const std::vector<std::string>& cycle);

// True iff `cycle` is a simple directed cycle (edge ids in traversal order).
bool is_directed_cycle(const OrientedGraph& g, const std::vector<std::string>& cycle);

// Number of sources of the cycle viewed as an edge-oriented subgraph.
int cycle_sources(const OrientedGraph& g, const std::vector<std::string>& cycle);

}  // namespace sg
