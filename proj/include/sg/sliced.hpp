#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sg/graph.hpp"

namespace sg {

// One elementary event in a top-to-bottom sliced presentation.  Positions are
// 1-based row indices at the moment the event is applied.
struct Event {
  enum class Kind { Max, Min, Cross, Vertex };
  enum class Side { Left, Right };

  Kind kind;
  int pos = 1;
  std::string edge;               // Max, Min
  Side down_side = Side::Left;    // Max: which inserted point is down-directed
  Side over = Side::Left;         // Cross: which incoming strand passes over
  std::string vertex;             // Vertex
  std::vector<std::string> ins;   // Vertex: in-edges, left to right
  std::vector<std::string> outs;  // Vertex: out-edges, left to right

  static Event max(int pos, std::string edge, Side down);
  static Event min(int pos, std::string edge);
  static Event cross(int pos, Side over);
  static Event vertex_event(std::string v, int pos, std::vector<std::string> ins,
                            std::vector<std::string> outs);
  bool operator==(const Event&) const = default;
};

struct SlicedDiagram {
  std::string name = "d";
  OrientedGraph graph;
  std::vector<Event> events;
};

struct ValidationReport {
  bool ok = true;
  std::size_t event_index = 0;  // first offending event when !ok
  std::string message;
};

// One strand point alive between two events.
struct StrandPoint {
  std::string edge;
  bool up = false;  // direction of the edge's orientation along this arc
};

// Result of simulating the event list; instances identify arcs between their
// birth and death events.  Used by tracing, smoothing, layout and the moves.
struct Trace {
  struct Instance {
    std::string edge;
    bool up = false;
    std::size_t birth_event = 0;  // event that created the point
    std::size_t death_event = 0;  // event that consumed it
  };
  struct CrossInfo {
    std::size_t event = 0;
    int left_inst = -1, right_inst = -1;  // incoming instances (left, right)
  };
  std::vector<Instance> instances;
  std::vector<CrossInfo> crossings;
  // rows[i] = instance ids alive after event i (row 0 = before first event).
  std::vector<std::vector<int>> rows;
};

// A maximal up-directed run; every up instance spans one run from the
// local minimum where it starts to the local maximum where it ends.
struct UpwardArc {
  std::string edge;
  int instance = -1;
  std::size_t max_event = 0;  // top end
  std::size_t min_event = 0;  // bottom end
};

SlicedDiagram parse_sliced(std::string_view text, const std::string& base_dir = ".");
std::string serialize_sliced(const SlicedDiagram& s);

ValidationReport validate_sliced(const SlicedDiagram& s);
// Throws std::runtime_error if invalid.
void require_valid(const SlicedDiagram& s);

OrientedGraph underlying_graph(const SlicedDiagram& s);
Trace trace_strands(const SlicedDiagram& s);

// +1 iff rotating the under-strand's direction a quarter turn
// counterclockwise aligns it with the over-strand's direction.
int crossing_sign(const SlicedDiagram& s, std::size_t event_index);

// Half the signed crossing sum between strands of two disjoint cycles.
int linking_number(const SlicedDiagram& s, const std::vector<std::string>& cycle1,
                   const std::vector<std::string>& cycle2);

// Number of Max plus Min events on the cycle's strands.
int critical_points(const SlicedDiagram& s, const std::vector<std::string>& cycle);

std::vector<UpwardArc> upward_arcs(const SlicedDiagram& s);

// All vertex-disjoint, edge-disjoint pairs among the given cycles.
bool cycles_disjoint(const OrientedGraph& g, const std::vector<std::string>& c1,
                     const std::vector<std::string>& c2);

// Checks that `cycle` (a set of edge ids) induces a single closed curve:
// every touched vertex has induced undirected degree exactly 2 and the
// induced subgraph is connected.
bool is_cycle_edge_set(const OrientedGraph& g, const std::vector<std::string>& cycle);

}  // namespace sg
