#pragma once

// Shared hand-built diagrams used across the test suites.

#include <string>

#include "sg/sliced.hpp"

namespace sgtest {

using sg::Event;
using sg::OrientedGraph;
using sg::SlicedDiagram;

// One vertex, one loop edge drawn with a single ascent.
inline SlicedDiagram loop_diagram() {
  SlicedDiagram s;
  s.name = "loop";
  s.graph.vertices = {"v"};
  s.graph.edges = {{"e", "v", "v"}};
  s.events = {
      Event::max(1, "e", Event::Side::Left),
      Event::vertex_event("v", 1, {"e"}, {"e"}),
      Event::min(1, "e"),
  };
  return s;
}

// Two vertices a, b; e1..e4: a->b; e5..e8: b->a.  Crossing-free diagram with
// four ascents carrying the b->a edges back up.
inline SlicedDiagram trivial_example1() {
  SlicedDiagram s;
  s.name = "trivial_example1";
  s.graph.vertices = {"a", "b"};
  for (int i = 1; i <= 4; ++i) s.graph.edges.push_back({"e" + std::to_string(i), "a", "b"});
  for (int i = 5; i <= 8; ++i) s.graph.edges.push_back({"e" + std::to_string(i), "b", "a"});
  s.events = {
      Event::max(1, "e8", Event::Side::Left),
      Event::max(2, "e7", Event::Side::Left),
      Event::max(3, "e6", Event::Side::Left),
      Event::max(4, "e5", Event::Side::Left),
      Event::vertex_event("a", 1, {"e8", "e7", "e6", "e5"}, {"e1", "e2", "e3", "e4"}),
      Event::vertex_event("b", 1, {"e1", "e2", "e3", "e4"}, {"e8", "e7", "e6", "e5"}),
      Event::min(4, "e5"),
      Event::min(3, "e6"),
      Event::min(2, "e7"),
      Event::min(1, "e8"),
  };
  return s;
}

// Two one-loop components forming a Hopf link (two equal-sign crossings).
// p's return ascends on the far left, q's on the far right, so the wrapping
// stage adds no crossings of its own.
inline SlicedDiagram hopf_diagram() {
  SlicedDiagram s;
  s.name = "hopf";
  s.graph.vertices = {"u", "w"};
  s.graph.edges = {{"p", "u", "u"}, {"q", "w", "w"}};
  s.events = {
      Event::max(1, "p", Event::Side::Right),
      Event::max(3, "q", Event::Side::Left),
      Event::vertex_event("u", 2, {"p"}, {"p"}),
      Event::vertex_event("w", 3, {"q"}, {"q"}),
      Event::cross(2, Event::Side::Left),
      Event::cross(2, Event::Side::Left),
      Event::min(3, "q"),
      Event::min(1, "p"),
  };
  return s;
}

// Source-to-sink theta: three parallel descending edges, no ascents.
inline SlicedDiagram theta_diagram() {
  SlicedDiagram s;
  s.name = "theta";
  s.graph.vertices = {"a", "b"};
  s.graph.edges = {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}};
  s.events = {
      Event::vertex_event("a", 1, {}, {"e1", "e2", "e3"}),
      Event::vertex_event("b", 1, {"e1", "e2", "e3"}, {}),
  };
  return s;
}

// Closed 2-braid with three positive crossings on a single loop edge: a
// trefoil with one vertex on it.
inline SlicedDiagram trefoil_loop() {
  SlicedDiagram s;
  s.name = "trefoil_loop";
  s.graph.vertices = {"v"};
  s.graph.edges = {{"e", "v", "v"}};
  s.events = {
      Event::max(1, "e", Event::Side::Left),
      Event::max(2, "e", Event::Side::Left),
      Event::vertex_event("v", 1, {"e"}, {"e"}),
      Event::cross(1, Event::Side::Left),
      Event::cross(1, Event::Side::Left),
      Event::cross(1, Event::Side::Left),
      Event::min(2, "e"),
      Event::min(1, "e"),
  };
  return s;
}

// Directed 2-cycle (c1: v1->v2, c2: v2->v1) with a pendant edge p1: v2->v3.
inline SlicedDiagram path_cycle_diagram() {
  SlicedDiagram s;
  s.name = "path_cycle";
  s.graph.vertices = {"v1", "v2", "v3"};
  s.graph.edges = {{"c1", "v1", "v2"}, {"c2", "v2", "v1"}, {"p1", "v2", "v3"}};
  s.events = {
      Event::max(1, "c2", Event::Side::Left),
      Event::vertex_event("v1", 1, {"c2"}, {"c1"}),
      Event::vertex_event("v2", 1, {"c1"}, {"p1", "c2"}),
      Event::min(2, "c2"),
      Event::vertex_event("v3", 1, {"p1"}, {}),
  };
  return s;
}

// Directed 2-cycle component next to a single-edge tree component, drawn so
// the tree strand is row-adjacent to a cycle strand.
inline SlicedDiagram forest_cycle_diagram() {
  SlicedDiagram s;
  s.name = "forest_cycle";
  s.graph.vertices = {"w1", "w2", "z1", "z2"};
  s.graph.edges = {{"u1", "w1", "w2"}, {"u2", "w2", "w1"}, {"t1", "z1", "z2"}};
  s.events = {
      Event::max(1, "u2", Event::Side::Left),
      Event::vertex_event("w1", 1, {"u2"}, {"u1"}),
      Event::vertex_event("z1", 1, {}, {"t1"}),
      Event::vertex_event("z2", 1, {"t1"}, {}),
      Event::vertex_event("w2", 1, {"u1"}, {"u2"}),
      Event::min(1, "u2"),
  };
  return s;
}

// The knotted embedding of the example-1 graph: e1 and e2 twist around each
// other three times, tying the cycle e1 u e2 into a trefoil.  The crossings
// respect the downward orientation of both strands, so the smoothing stays
// connected just like the trivial diagram's.
inline SlicedDiagram example1_g() {
  SlicedDiagram s = trivial_example1();
  s.name = "example1_g";
  auto it = s.events.begin() + 5;  // right below vertex a
  std::vector<Event> twist = {
      Event::cross(1, Event::Side::Left),
      Event::cross(1, Event::Side::Left),
      Event::cross(1, Event::Side::Left),
  };
  s.events.insert(it, twist.begin(), twist.end());
  // an odd number of swaps leaves e2 left of e1 at vertex b
  for (auto& e : s.events)
    if (e.kind == Event::Kind::Vertex && e.vertex == "b") std::swap(e.ins[0], e.ins[1]);
  return s;
}

// A one-loop diagram whose ascent passes over both crossings; exercises the
// braiding pipeline's broken-run wrapping.
inline SlicedDiagram up_over_loop() {
  SlicedDiagram s;
  s.name = "up_over_loop";
  s.graph.vertices = {"v"};
  s.graph.edges = {{"e", "v", "v"}};
  s.events = {
      Event::max(1, "e", Event::Side::Left),
      Event::cross(1, Event::Side::Right),
      Event::vertex_event("v", 2, {"e"}, {"e"}),
      Event::cross(1, Event::Side::Left),
      Event::min(1, "e"),
  };
  return s;
}

// Four-edge circulating graph on two vertices, crossing-free diagram.
inline SlicedDiagram circ4_diagram() {
  SlicedDiagram s;
  s.name = "circ4";
  s.graph.vertices = {"a", "b"};
  s.graph.edges = {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "b", "a"}, {"e4", "b", "a"}};
  s.events = {
      Event::max(1, "e4", Event::Side::Left),
      Event::max(2, "e3", Event::Side::Left),
      Event::vertex_event("a", 1, {"e4", "e3"}, {"e1", "e2"}),
      Event::vertex_event("b", 1, {"e1", "e2"}, {"e4", "e3"}),
      Event::min(2, "e3"),
      Event::min(1, "e4"),
  };
  return s;
}

}  // namespace sgtest
