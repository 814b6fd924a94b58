#include "sg/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "sg/braid.hpp"

namespace sg {

namespace {

// Canonical key: the event list alone (the graph never changes under moves).
std::string event_key(const SlicedDiagram& s) {
  std::ostringstream out;
  for (const auto& e : s.events) {
    switch (e.kind) {
      case Event::Kind::Max:
        out << "M" << e.pos << "," << e.edge << "," << (e.down_side == Event::Side::Left) << ";";
        break;
      case Event::Kind::Min:
        out << "m" << e.pos << "," << e.edge << ";";
        break;
      case Event::Kind::Cross:
        out << "x" << e.pos << "," << (e.over == Event::Side::Left) << ";";
        break;
      case Event::Kind::Vertex: {
        out << "v" << e.pos << "," << e.vertex << ",";
        for (const auto& id : e.ins) out << id << " ";
        out << "|";
        for (const auto& id : e.outs) out << id << " ";
        out << ";";
        break;
      }
    }
  }
  return out.str();
}

int mu_of(const SlicedDiagram& s) { return complex_stats(smooth(s)).mu; }

}  // namespace

MinimizeResult minimize_smoothing(const SlicedDiagram& s, std::size_t budget, int depth) {
  require_valid(s);
  MinimizeResult res;
  res.best = s;
  res.mu = mu_of(s);
  int floor = std::max(1, euler_characteristic(s.graph));

  std::set<std::string> seen{event_key(s)};
  std::deque<std::pair<SlicedDiagram, int>> frontier;
  frontier.push_back({s, 0});
  res.visited = 1;

  while (!frontier.empty()) {
    auto [cur, d] = frontier.front();
    frontier.pop_front();
    if (d >= depth) continue;
    if (res.mu == floor) break;  // nothing below the global lower bound
    for (const auto& m : enumerate_moves(cur)) {
      auto next = apply_move(cur, m);
      if (!next) continue;
      auto key = event_key(*next);
      if (!seen.insert(key).second) continue;
      if (res.visited >= budget) {
        res.exhausted_budget = true;
        return res;
      }
      ++res.visited;
      int mu = mu_of(*next);
      if (mu < res.mu) {
        res.mu = mu;
        res.best = *next;
        if (mu < floor) throw std::logic_error("minimize_smoothing: mu below max{1, chi}");
      }
      res.depth_reached = std::max(res.depth_reached, d + 1);
      frontier.push_back({std::move(*next), d + 1});
    }
  }
  return res;
}

namespace {

// Inserts a hooking crossing at event gap `gidx`, position `p`, and repairs
// the event list downstream: until the swapped pair is consumed or crossed
// again, later events covering both positions get their vertex lists
// reordered and events consuming one member shift onto it.  Returns nothing
// when the site cannot be repaired.
std::optional<SlicedDiagram> hook_repair(const SlicedDiagram& s, std::size_t gidx, int p,
                                         Event::Side over) {
  SlicedDiagram out = s;
  out.events.insert(out.events.begin() + gidx, Event::cross(p, over));
  int pp = p;  // left position of the swapped pair; -1 once resolved
  for (std::size_t i = gidx + 1; i < out.events.size() && pp >= 0; ++i) {
    Event& e = out.events[i];
    int cons = 0, ins = 0;
    switch (e.kind) {
      case Event::Kind::Max: ins = 2; break;
      case Event::Kind::Min: cons = 2; break;
      case Event::Kind::Cross: cons = 2; ins = 2; break;
      case Event::Kind::Vertex:
        cons = (int)e.ins.size();
        ins = (int)e.outs.size();
        break;
    }
    if (cons == 0) {  // pure insertion
      if (e.pos <= pp)
        pp += ins;
      else if (e.pos == pp + 1)
        return std::nullopt;  // splits the pair
      continue;
    }
    int lo = e.pos, hi = e.pos + cons - 1;
    if (hi < pp) {
      pp += ins - cons;
      continue;
    }
    if (lo > pp + 1) continue;
    if (lo <= pp && hi >= pp + 1) {
      // window covers both members
      if (e.kind == Event::Kind::Vertex) {
        std::swap(e.ins[pp - lo], e.ins[pp - lo + 1]);
        pp = -1;
      } else if (e.kind == Event::Kind::Cross && e.pos == pp) {
        pp = -1;  // crossed again: order restored from here on
      } else {
        return std::nullopt;  // a min across two different edges
      }
      continue;
    }
    // window covers exactly one member: shift onto the moved strand and hope
    // the final validation agrees
    if (hi == pp)
      e.pos += 1;
    else if (lo == pp + 1)
      e.pos -= 1;
    pp = -1;
  }
  if (!validate_sliced(out).ok) return std::nullopt;
  if (!graphs_equal_labeled(underlying_graph(out), s.graph)) return std::nullopt;
  return out;
}

// Component id per vertex, by undirected reachability.
std::map<std::string, int> vertex_components(const OrientedGraph& g) {
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

}  // namespace

SlicedDiagram hook_trees(const SlicedDiagram& s,
                         const std::vector<std::pair<std::string, std::string>>& assignments) {
  SlicedDiagram cur = s;
  require_valid(cur);
  OrientedGraph g = underlying_graph(cur);
  auto comp = vertex_components(g);

  std::set<int> tree_comps;
  for (const auto& [rep, target] : assignments) {
    if (!g.has_vertex(rep)) throw std::invalid_argument("hook_trees: unknown vertex " + rep);
    int c = comp.at(rep);
    if (!tree_comps.insert(c).second)
      throw std::invalid_argument("hook_trees: overlapping assignments");
    int nv = 0, ne = 0;
    for (const auto& [v, cc] : comp) nv += cc == c;
    for (const auto& e : g.edges) ne += comp.at(e.tail) == c;
    if (ne != nv - 1) throw std::invalid_argument("hook_trees: component of " + rep + " is not a tree");
  }
  for (const auto& [rep, target] : assignments) {
    const auto* e = g.find_edge(target);
    if (!e) throw std::invalid_argument("hook_trees: unknown edge " + target);
    if (tree_comps.count(comp.at(e->tail)))
      throw std::invalid_argument("hook_trees: target edge " + target + " lies in a hooked tree");
  }

  for (const auto& [rep, target] : assignments) {
    int c = comp.at(rep);
    std::set<std::string> tree_edges;
    for (const auto& e : g.edges)
      if (comp.at(e.tail) == c) tree_edges.insert(e.id);

    Trace t = trace_strands(cur);
    bool hooked = false;
    for (std::size_t gidx = 0; gidx < t.rows.size() && !hooked; ++gidx) {
      const auto& row = t.rows[gidx];
      for (std::size_t p = 0; p + 1 < row.size() && !hooked; ++p) {
        const auto& le = t.instances[row[p]].edge;
        const auto& re = t.instances[row[p + 1]].edge;
        bool tl = tree_edges.count(le), tr = tree_edges.count(re);
        if (!((tl && re == target) || (tr && le == target))) continue;
        // The tree strand passes under the target edge; the swap it causes is
        // repaired downstream (positions shift, vertex lists reorder).
        Event::Side over = tl ? Event::Side::Right : Event::Side::Left;
        auto candidate = hook_repair(cur, gidx, (int)p + 1, over);
        if (candidate) {
          cur = std::move(*candidate);
          hooked = true;
        }
      }
    }
    if (!hooked)
      throw std::runtime_error("hook_trees: no workable row where the tree of " + rep +
                               " runs beside edge " + target);
    require_valid(cur);
  }
  return cur;
}

BoundsReport s_bounds(const SlicedDiagram& s, std::size_t budget, int depth) {
  if (has_isolated_vertex(s.graph))
    throw std::invalid_argument("s_bounds: graph has isolated vertices");
  BoundsReport r;
  r.s_lower = std::max(1, euler_characteristic(s.graph));
  r.s_exact = !is_circulating(s.graph);
  auto mr = minimize_smoothing(s, budget, depth);
  r.s_upper = mr.mu;
  if (mr.exhausted_budget) r.notes.push_back("search budget exhausted; s_upper is best found");
  if (r.s_exact) r.notes.push_back("non-circulating graph: s equals max{1, chi} for every embedding");
  if (r.s_lower > r.s_upper) throw std::logic_error("s_bounds: lower bound exceeds upper bound");
  return r;
}

BoundsReport b_bounds(const SlicedDiagram& s, const std::vector<BridgeOracleEntry>& oracle) {
  BoundsReport r;
  OrientedGraph g = underlying_graph(s);
  r.b_upper = b_tilde(braid(s));
  r.b_lower = 1;
  for (const auto& entry : oracle) {
    if (!is_cycle_edge_set(g, entry.cycle))
      throw std::invalid_argument("b_bounds: oracle entry is not a cycle");
    int alpha = cycle_sources(g, entry.cycle);
    int lb = entry.bridge - alpha;
    if (lb > r.b_lower) r.b_lower = lb;
    std::ostringstream note;
    note << "oracle cycle with bridge " << entry.bridge << " and " << alpha
         << " sources gives b >= " << lb;
    r.notes.push_back(note.str());
  }
  if (r.b_lower > r.b_upper)
    throw std::runtime_error("b_bounds: oracle lower bound exceeds the attained b~");
  return r;
}

BoundsReport bounds(const SlicedDiagram& s, std::size_t budget, int depth,
                    const std::vector<BridgeOracleEntry>& oracle) {
  BoundsReport r = s_bounds(s, budget, depth);
  BoundsReport b = b_bounds(s, oracle);
  r.b_upper = b.b_upper;
  r.b_lower = b.b_lower;
  for (const auto& note : b.notes) r.notes.push_back(note);
  return r;
}

CirculatingCertificate s_certificate_circulating(const SlicedDiagram& s,
                                                 const std::vector<std::string>& cycle,
                                                 int b_cycle_lower) {
  OrientedGraph g = underlying_graph(s);
  if (!is_circulating(g))
    throw std::invalid_argument("s_certificate_circulating: graph is not circulating");
  if (!is_directed_cycle(g, cycle))
    throw std::invalid_argument("s_certificate_circulating: not a directed cycle");
  if (b_cycle_lower < 1)
    throw std::invalid_argument("s_certificate_circulating: braid index bound must be >= 1");
  CirculatingCertificate c;
  c.bound = b_cycle_lower + euler_characteristic(g);
  c.vacuous = c.bound < 1;
  c.mu = complex_stats(smooth(s)).mu;
  if (c.mu < c.bound)
    throw std::logic_error("s_certificate_circulating: certificate exceeds the diagram's mu");
  return c;
}

}  // namespace sg
