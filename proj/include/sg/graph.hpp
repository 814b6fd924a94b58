#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sg {

// Error thrown by the text-format parsers; carries a 1-based line number.
struct parse_error : std::runtime_error {
  parse_error(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  int line;
};

// Finite edge-oriented multigraph.  Loops and parallel edges are allowed.
// Ids are [A-Za-z0-9_]+ strings; labels are significant (equality is
// label-preserving, not isomorphism).
struct OrientedGraph {
  struct Edge {
    std::string id, tail, head;
  };
  std::string name = "g";
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  bool has_vertex(const std::string& v) const;
  const Edge* find_edge(const std::string& id) const;
  std::vector<std::string> in_edges(const std::string& v) const;   // edges with head v
  std::vector<std::string> out_edges(const std::string& v) const;  // edges with tail v
  bool empty() const { return vertices.empty() && edges.empty(); }
};

struct DegreeProfile {
  // vertex id -> (indeg, outdeg); loops count once toward each.
  std::map<std::string, std::pair<int, int>> degrees;
  std::vector<std::string> sources;  // indeg == 0
  std::vector<std::string> sinks;    // outdeg == 0
};

struct CycleScan {
  bool has_unoriented_cycle = false;
  std::vector<std::vector<std::string>> oriented_cycles;  // cyclic edge-id sequences
  bool truncated = false;
};

OrientedGraph parse_graph(std::string_view text);
std::string serialize_graph(const OrientedGraph& g);  // normalized: sorted ids

DegreeProfile degree_profile(const OrientedGraph& g);
int euler_characteristic(const OrientedGraph& g);  // |V| - |E|
bool is_circulating(const OrientedGraph& g);
bool has_isolated_vertex(const OrientedGraph& g);
CycleScan find_cycles(const OrientedGraph& g, std::size_t limit);
bool graphs_equal_labeled(const OrientedGraph& a, const OrientedGraph& b);

// Checks id uniqueness and endpoint existence; throws std::runtime_error on
// violation.  Parsers call this; programmatic constructions may too.
void check_graph(const OrientedGraph& g);

}  // namespace sg
