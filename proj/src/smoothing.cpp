#include "sg/smoothing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sg {

namespace {

struct Dsu {
  std::vector<int> parent;
  int make() {
    parent.push_back((int)parent.size());
    return (int)parent.size() - 1;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct SmoothPoint {
  std::string edge;
  bool up;
  int elem;
};

}  // namespace

SmoothedComplex smooth(const SlicedDiagram& s) {
  require_valid(s);

  Dsu arcs;
  std::vector<std::pair<int, std::string>> attach;  // (arc elem, vertex id)
  std::vector<SmoothPoint> row;

  for (const auto& e : s.events) {
    switch (e.kind) {
      case Event::Kind::Max: {
        int a = arcs.make();
        bool left_down = e.down_side == Event::Side::Left;
        row.insert(row.begin() + (e.pos - 1),
                   {SmoothPoint{e.edge, !left_down, a}, SmoothPoint{e.edge, left_down, a}});
        break;
      }
      case Event::Kind::Min: {
        arcs.unite(row[e.pos - 1].elem, row[e.pos].elem);
        row.erase(row.begin() + (e.pos - 1), row.begin() + (e.pos + 1));
        break;
      }
      case Event::Kind::Cross: {
        SmoothPoint& l = row[e.pos - 1];
        SmoothPoint& r = row[e.pos];
        if (l.up == r.up) {
          // Orientation-respecting resolution keeps each side in place; the
          // underlying strands swap but the smoothed arcs do not.
          std::swap(l.edge, r.edge);
          std::swap(l.up, r.up);
        } else {
          // One strand ascends: the resolution is a cup above a cap.
          arcs.unite(l.elem, r.elem);
          int f = arcs.make();
          std::swap(l.edge, r.edge);
          std::swap(l.up, r.up);
          l.elem = f;
          r.elem = f;
        }
        break;
      }
      case Event::Kind::Vertex: {
        int k = (int)e.ins.size();
        for (int j = 0; j < k; ++j) attach.push_back({row[e.pos - 1 + j].elem, e.vertex});
        row.erase(row.begin() + (e.pos - 1), row.begin() + (e.pos - 1 + k));
        std::vector<SmoothPoint> outs;
        for (const auto& id : e.outs) {
          int a = arcs.make();
          attach.push_back({a, e.vertex});
          outs.push_back({id, false, a});
        }
        row.insert(row.begin() + (e.pos - 1), outs.begin(), outs.end());
        break;
      }
    }
  }

  // Collapse arc elements to classes.
  std::map<int, int> arc_id;  // root -> dense id
  for (int i = 0; i < (int)arcs.parent.size(); ++i) {
    int r = arcs.find(i);
    if (!arc_id.count(r)) arc_id[r] = (int)arc_id.size();
  }
  int n_arcs = (int)arc_id.size();

  std::map<std::string, int> node_id;
  for (const auto& v : s.graph.vertices) node_id[v] = (int)node_id.size();
  int n_nodes = (int)node_id.size();

  // Components over nodes and arcs together.
  Dsu comp;
  for (int i = 0; i < n_nodes + n_arcs; ++i) comp.make();
  std::set<int> arc_attached;
  for (const auto& [elem, v] : attach) {
    int a = arc_id.at(arcs.find(elem));
    arc_attached.insert(a);
    comp.unite(node_id.at(v), n_nodes + a);
  }

  SmoothedComplex x;
  // Free circles (arcs with no vertex on them) carry an anchor node so that
  // each contributes chi = 0.
  for (int a = 0; a < n_arcs; ++a)
    if (!arc_attached.count(a)) x.free_circles++;
  x.nodes = n_nodes + x.free_circles;
  x.arcs = n_arcs;

  std::map<int, int> croot;
  for (int v = 0; v < n_nodes; ++v) {
    int r = comp.find(v);
    if (!croot.count(r)) croot[r] = (int)croot.size();
  }
  for (int a = 0; a < n_arcs; ++a) {
    int r = comp.find(n_nodes + a);
    if (!croot.count(r)) croot[r] = (int)croot.size();
  }
  x.components = (int)croot.size();
  for (int v = 0; v < n_nodes; ++v) x.component_of_node.push_back(croot.at(comp.find(v)));
  return x;
}

ComplexStats complex_stats(const SmoothedComplex& x) {
  ComplexStats st;
  st.mu = x.components;
  st.chi = x.nodes - x.arcs;
  st.beta1 = st.mu - st.chi;
  return st;
}

SmoothingReport smoothing_report(const SlicedDiagram& s) {
  auto st = complex_stats(smooth(s));
  SmoothingReport r;
  r.mu = st.mu;
  r.chi_graph = euler_characteristic(s.graph);
  r.beta1 = st.beta1;
  r.prop_ok = st.mu >= r.chi_graph;
  r.chi_preserved = st.chi == r.chi_graph;
  return r;
}

bool is_directed_cycle(const OrientedGraph& g, const std::vector<std::string>& cycle) {
  if (cycle.empty()) return false;
  std::set<std::string> seen_v;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto* e = g.find_edge(cycle[i]);
    const auto* f = g.find_edge(cycle[(i + 1) % cycle.size()]);
    if (!e || !f) return false;
    if (e->head != f->tail) return false;
    if (!seen_v.insert(e->tail).second) return false;
  }
  return true;
}

int cycle_sources(const OrientedGraph& g, const std::vector<std::string>& cycle) {
  std::map<std::string, std::pair<int, int>> deg;  // vertex -> (indeg, outdeg) in subgraph
  for (const auto& id : cycle) {
    const auto* e = g.find_edge(id);
    if (!e) throw std::invalid_argument("cycle_sources: unknown edge " + id);
    deg[e->head].first++;
    deg[e->tail].second++;
  }
  int n = 0;
  for (const auto& [v, d] : deg)
    if (d.first == 0) ++n;
  return n;
}

namespace {

std::string fresh_vertex_id(std::set<std::string>& used, const std::string& base, int j) {
  std::string cand = base + "_" + std::to_string(j);
  while (used.count(cand)) cand += "x";
  used.insert(cand);
  return cand;
}

}  // namespace

SlicedDiagram cycle_reduction(const SlicedDiagram& s, const std::vector<std::string>& cycle) {
  require_valid(s);
  OrientedGraph g = underlying_graph(s);
  if (!is_directed_cycle(g, cycle))
    throw std::invalid_argument("cycle_reduction: not a directed cycle");
  if (!is_circulating(g))
    throw std::invalid_argument("cycle_reduction: graph is not circulating");

  std::set<std::string> cyc(cycle.begin(), cycle.end());
  // gamma_in[v] / gamma_out[v] for vertices on the cycle.
  std::map<std::string, std::string> gin, gout;
  for (const auto& id : cycle) {
    const auto* e = g.find_edge(id);
    gin[e->head] = id;
    gout[e->tail] = id;
  }

  SlicedDiagram out;
  out.name = s.name + "_reduced";
  std::set<std::string> used_ids(g.vertices.begin(), g.vertices.end());
  std::map<std::string, std::pair<std::string, std::string>> ends;  // edge -> (tail, head)
  for (const auto& e : g.edges) ends[e.id] = {"", ""};

  auto emit_vertex = [&](const std::string& vid, int pos, const std::string& in_e,
                         const std::string& out_e) {
    out.events.push_back(Event::vertex_event(vid, pos, {in_e}, {out_e}));
    out.graph.vertices.push_back(vid);
    ends[in_e].second = vid;
    ends[out_e].first = vid;
  };

  for (const auto& e : s.events) {
    if (e.kind != Event::Kind::Vertex) {
      out.events.push_back(e);
      continue;
    }
    int k = (int)e.ins.size();
    int pos = e.pos;
    if (!gin.count(e.vertex)) {
      // Vertex off the cycle: k disjoint pass-through arcs.
      for (int j = 0; j < k; ++j)
        emit_vertex(fresh_vertex_id(used_ids, e.vertex, j + 1), pos + j, e.ins[j], e.outs[j]);
      continue;
    }
    // Vertex on the cycle: pair off same-side (in, out) strands, walk the
    // cycle strand across the leftovers (passing over them), keep the vertex
    // 2-valent on the cycle.
    int t = 1 + (int)(std::find(e.ins.begin(), e.ins.end(), gin[e.vertex]) - e.ins.begin());
    int u = 1 + (int)(std::find(e.outs.begin(), e.outs.end(), gout[e.vertex]) - e.outs.begin());
    if (u > t) {
      for (int c = t; c <= u - 1; ++c)
        out.events.push_back(Event::cross(pos + c - 1, Event::Side::Left));
    } else if (t > u) {
      for (int c = t - 1; c >= u; --c)
        out.events.push_back(Event::cross(pos + c - 1, Event::Side::Right));
    }
    for (int j = 1; j <= k; ++j) {
      if (j == u) {
        emit_vertex(e.vertex, pos + j - 1, gin[e.vertex], gout[e.vertex]);
      } else if (u > t && j >= t && j <= u - 1) {
        // Strands left of the walk shifted one slot left: slot j holds in j+1.
        emit_vertex(fresh_vertex_id(used_ids, e.vertex, j), pos + j - 1, e.ins[j], e.outs[j - 1]);
      } else if (t > u && j >= u + 1 && j <= t) {
        // Mirror case: slot j holds in j-1.
        emit_vertex(fresh_vertex_id(used_ids, e.vertex, j), pos + j - 1, e.ins[j - 2], e.outs[j - 1]);
      } else {
        emit_vertex(fresh_vertex_id(used_ids, e.vertex, j), pos + j - 1, e.ins[j - 1], e.outs[j - 1]);
      }
    }
  }

  for (const auto& e : g.edges) out.graph.edges.push_back({e.id, ends[e.id].first, ends[e.id].second});
  require_valid(out);
  // Sanity: the output must be a link (every vertex 2-valent, in = out = 1).
  auto prof = degree_profile(out.graph);
  for (const auto& [v, d] : prof.degrees)
    if (d.first != 1 || d.second != 1)
      throw std::logic_error("cycle_reduction: output is not a link at " + v);
  return out;
}

ReductionCheck reduction_inequality_check(const SlicedDiagram& s,
                                          const std::vector<std::string>& cycle) {
  OrientedGraph g = underlying_graph(s);
  if (!is_circulating(g))
    throw std::invalid_argument("reduction_inequality_check: graph is not circulating");
  ReductionCheck rc;
  rc.mu_before = complex_stats(smooth(s)).mu;
  SlicedDiagram d2 = cycle_reduction(s, cycle);
  rc.mu_after = complex_stats(smooth(d2)).mu;
  auto prof = degree_profile(g);
  for (const auto& [v, d] : prof.degrees) rc.indeg_excess += d.first - 1;
  rc.chi_graph = euler_characteristic(g);
  rc.inequality_ok = rc.mu_before >= rc.mu_after - rc.indeg_excess;
  rc.handshake_ok = rc.indeg_excess == -rc.chi_graph;

  auto count_cross = [](const SlicedDiagram& d) {
    int n = 0;
    for (const auto& e : d.events)
      if (e.kind == Event::Kind::Cross) ++n;
    return n;
  };
  rc.added_crossings = count_cross(d2) - count_cross(s);
  rc.events_before = (int)s.events.size();
  rc.events_after = (int)d2.events.size();
  return rc;
}

}  // namespace sg
