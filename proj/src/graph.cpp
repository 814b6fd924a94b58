#include "sg/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sg {

bool OrientedGraph::has_vertex(const std::string& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const OrientedGraph::Edge* OrientedGraph::find_edge(const std::string& id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<std::string> OrientedGraph::in_edges(const std::string& v) const {
  std::vector<std::string> r;
  for (const auto& e : edges)
    if (e.head == v) r.push_back(e.id);
  return r;
}

std::vector<std::string> OrientedGraph::out_edges(const std::string& v) const {
  std::vector<std::string> r;
  for (const auto& e : edges)
    if (e.tail == v) r.push_back(e.id);
  return r;
}

void check_graph(const OrientedGraph& g) {
  std::set<std::string> vs, es;
  for (const auto& v : g.vertices)
    if (!vs.insert(v).second) throw std::runtime_error("duplicate vertex id: " + v);
  for (const auto& e : g.edges) {
    if (!es.insert(e.id).second) throw std::runtime_error("duplicate edge id: " + e.id);
    if (!vs.count(e.tail)) throw std::runtime_error("dangling endpoint: edge " + e.id + " tail " + e.tail);
    if (!vs.count(e.head)) throw std::runtime_error("dangling endpoint: edge " + e.id + " head " + e.head);
  }
}

namespace {

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(isalnum((unsigned char)c) || c == '_')) return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

OrientedGraph parse_graph(std::string_view text) {
  OrientedGraph g;
  g.name.clear();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "graph") {
      if (toks.size() != 2 || !valid_id(toks[1])) throw parse_error(lineno, "expected: graph <name>");
      g.name = toks[1];
      saw_header = true;
    } else if (toks[0] == "vertex") {
      if (toks.size() != 2 || !valid_id(toks[1])) throw parse_error(lineno, "expected: vertex <id>");
      g.vertices.push_back(toks[1]);
    } else if (toks[0] == "edge") {
      if (toks.size() != 4 || !valid_id(toks[1]) || !valid_id(toks[2]) || !valid_id(toks[3]))
        throw parse_error(lineno, "expected: edge <id> <tail> <head>");
      g.edges.push_back({toks[1], toks[2], toks[3]});
    } else {
      throw parse_error(lineno, "unknown directive: " + toks[0]);
    }
  }
  if (!saw_header) g.name = "g";
  try {
    check_graph(g);
  } catch (const std::runtime_error& e) {
    throw parse_error(lineno, e.what());
  }
  return g;
}

std::string serialize_graph(const OrientedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.name << "\n";
  auto vs = g.vertices;
  std::sort(vs.begin(), vs.end());
  for (const auto& v : vs) out << "vertex " << v << "\n";
  auto es = g.edges;
  std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& e : es) out << "edge " << e.id << " " << e.tail << " " << e.head << "\n";
  return out.str();
}

DegreeProfile degree_profile(const OrientedGraph& g) {
  DegreeProfile p;
  for (const auto& v : g.vertices) p.degrees[v] = {0, 0};
  for (const auto& e : g.edges) {
    p.degrees[e.head].first++;
    p.degrees[e.tail].second++;
  }
  for (const auto& [v, d] : p.degrees) {
    if (d.first == 0) p.sources.push_back(v);
    if (d.second == 0) p.sinks.push_back(v);
  }
  return p;
}

int euler_characteristic(const OrientedGraph& g) {
  return (int)g.vertices.size() - (int)g.edges.size();
}

bool is_circulating(const OrientedGraph& g) {
  auto p = degree_profile(g);
  for (const auto& [v, d] : p.degrees)
    if (d.first != d.second) return false;
  return true;
}

bool has_isolated_vertex(const OrientedGraph& g) {
  auto p = degree_profile(g);
  for (const auto& [v, d] : p.degrees)
    if (d.first == 0 && d.second == 0) return true;
  return false;
}

namespace {

// Undirected connectivity classes over vertices (edges join tail/head).
std::map<std::string, int> components(const OrientedGraph& g) {
  std::map<std::string, int> comp;
  int next = 0;
  for (const auto& v : g.vertices) comp[v] = next++;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : g.edges) {
      int a = comp[e.tail], b = comp[e.head];
      if (a != b) {
        int lo = std::min(a, b), hi = std::max(a, b);
        for (auto& [v, c] : comp)
          if (c == hi) c = lo;
        changed = true;
      }
    }
  }
  return comp;
}

struct CycleDfs {
  const OrientedGraph& g;
  std::map<std::string, std::vector<const OrientedGraph::Edge*>> out;
  std::size_t limit;
  bool truncated = false;
  std::vector<std::vector<std::string>> found;
  std::vector<std::string> path_edges;
  std::set<std::string> on_path;  // vertices
  std::string start;

  explicit CycleDfs(const OrientedGraph& g_, std::size_t limit_) : g(g_), limit(limit_) {
    for (const auto& e : g.edges) out[e.tail].push_back(&e);
    for (auto& [v, es] : out)
      std::sort(es.begin(), es.end(), [](auto* a, auto* b) { return a->id < b->id; });
  }

  void run() {
    auto vs = g.vertices;
    std::sort(vs.begin(), vs.end());
    for (const auto& s : vs) {
      start = s;
      on_path.insert(s);
      dfs(s);
      on_path.erase(s);
      if (truncated) return;
    }
  }

  // Simple directed cycles whose minimal vertex is `start`; vertices on the
  // path are distinct and all >= start.
  void dfs(const std::string& v) {
    if (truncated) return;
    for (auto* e : out[v]) {
      if (truncated) return;
      if (e->head == start) {
        if (found.size() >= limit) {
          truncated = true;
          return;
        }
        auto cyc = path_edges;
        cyc.push_back(e->id);
        found.push_back(std::move(cyc));
        continue;
      }
      if (e->head < start || on_path.count(e->head)) continue;
      on_path.insert(e->head);
      path_edges.push_back(e->id);
      dfs(e->head);
      path_edges.pop_back();
      on_path.erase(e->head);
    }
  }
};

}  // namespace

CycleScan find_cycles(const OrientedGraph& g, std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("find_cycles: limit must be >= 1");
  CycleScan scan;

  // A component has an unoriented cycle iff it is not a tree.
  auto comp = components(g);
  std::map<int, std::pair<int, int>> ve;  // comp -> (#V, #E)
  for (const auto& [v, c] : comp) ve[c].first++;
  for (const auto& e : g.edges) ve[comp.at(e.tail)].second++;
  for (const auto& [c, n] : ve)
    if (n.second >= n.first) scan.has_unoriented_cycle = true;

  CycleDfs dfs(g, limit);
  dfs.run();
  scan.oriented_cycles = std::move(dfs.found);
  scan.truncated = dfs.truncated;
  std::sort(scan.oriented_cycles.begin(), scan.oriented_cycles.end(),
            [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              auto ka = a, kb = b;
              std::sort(ka.begin(), ka.end());
              std::sort(kb.begin(), kb.end());
              return ka != kb ? ka < kb : a < b;
            });
  return scan;
}

bool graphs_equal_labeled(const OrientedGraph& a, const OrientedGraph& b) {
  auto va = a.vertices, vb = b.vertices;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  if (va != vb) return false;
  auto key = [](const OrientedGraph& g) {
    std::vector<std::string> k;
    for (const auto& e : g.edges) k.push_back(e.id + "\t" + e.tail + "\t" + e.head);
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(a) == key(b);
}

}  // namespace sg
