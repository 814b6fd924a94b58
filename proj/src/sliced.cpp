#include "sg/sliced.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sg {

Event Event::max(int pos, std::string edge, Side down) {
  Event e;
  e.kind = Kind::Max;
  e.pos = pos;
  e.edge = std::move(edge);
  e.down_side = down;
  return e;
}
Event Event::min(int pos, std::string edge) {
  Event e;
  e.kind = Kind::Min;
  e.pos = pos;
  e.edge = std::move(edge);
  return e;
}
Event Event::cross(int pos, Side over) {
  Event e;
  e.kind = Kind::Cross;
  e.pos = pos;
  e.over = over;
  return e;
}
Event Event::vertex_event(std::string v, int pos, std::vector<std::string> ins,
                          std::vector<std::string> outs) {
  Event e;
  e.kind = Kind::Vertex;
  e.pos = pos;
  e.vertex = std::move(v);
  e.ins = std::move(ins);
  e.outs = std::move(outs);
  return e;
}

namespace {

struct SimPoint {
  std::string edge;
  bool up;
  int inst;
};

// Core simulation shared by validation and tracing.  On failure fills the
// report and returns false.
bool simulate(const SlicedDiagram& s, Trace* trace, ValidationReport* rep) {
  auto fail = [&](std::size_t i, const std::string& msg) {
    if (rep) {
      rep->ok = false;
      rep->event_index = i;
      rep->message = msg;
    }
    return false;
  };

  std::vector<SimPoint> row;
  auto new_inst = [&](const std::string& edge, bool up, std::size_t ev) {
    if (!trace) return -1;
    trace->instances.push_back({edge, up, ev, (std::size_t)-1});
    return (int)trace->instances.size() - 1;
  };
  auto kill = [&](int inst, std::size_t ev) {
    if (trace && inst >= 0) trace->instances[inst].death_event = ev;
  };
  auto record_row = [&]() {
    if (!trace) return;
    std::vector<int> ids;
    for (const auto& p : row) ids.push_back(p.inst);
    trace->rows.push_back(std::move(ids));
  };
  record_row();

  std::set<std::string> seen_vertices;

  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const Event& e = s.events[i];
    int n = (int)row.size();
    switch (e.kind) {
      case Event::Kind::Max: {
        if (e.pos < 1 || e.pos > n + 1) return fail(i, "max position out of range");
        if (!s.graph.find_edge(e.edge)) return fail(i, "max names unknown edge " + e.edge);
        bool left_down = e.down_side == Event::Side::Left;
        SimPoint a{e.edge, !left_down, new_inst(e.edge, !left_down, i)};
        SimPoint b{e.edge, left_down, new_inst(e.edge, left_down, i)};
        row.insert(row.begin() + (e.pos - 1), {a, b});
        break;
      }
      case Event::Kind::Min: {
        if (e.pos < 1 || e.pos > n - 1) return fail(i, "min position out of range");
        const SimPoint& a = row[e.pos - 1];
        const SimPoint& b = row[e.pos];
        if (a.edge != e.edge || b.edge != e.edge)
          return fail(i, "min consumes points of a different edge");
        if (a.up == b.up) return fail(i, "incoherent local minimum");
        kill(a.inst, i);
        kill(b.inst, i);
        row.erase(row.begin() + (e.pos - 1), row.begin() + (e.pos + 1));
        break;
      }
      case Event::Kind::Cross: {
        if (e.pos < 1 || e.pos > n - 1) return fail(i, "cross position out of range");
        if (trace)
          trace->crossings.push_back({i, row[e.pos - 1].inst, row[e.pos].inst});
        std::swap(row[e.pos - 1], row[e.pos]);
        break;
      }
      case Event::Kind::Vertex: {
        if (!s.graph.has_vertex(e.vertex)) return fail(i, "unknown vertex " + e.vertex);
        if (!seen_vertices.insert(e.vertex).second)
          return fail(i, "vertex " + e.vertex + " appears in more than one event");
        int k = (int)e.ins.size();
        if (e.pos < 1 || e.pos + k - 1 > n || (k == 0 && e.pos > n + 1))
          return fail(i, "vertex position out of range");
        {
          auto want = s.graph.in_edges(e.vertex);
          auto got = e.ins;
          std::sort(want.begin(), want.end());
          std::sort(got.begin(), got.end());
          if (want != got) return fail(i, "vertex in-list does not match in-edges of " + e.vertex);
          want = s.graph.out_edges(e.vertex);
          got = e.outs;
          std::sort(want.begin(), want.end());
          std::sort(got.begin(), got.end());
          if (want != got) return fail(i, "vertex out-list does not match out-edges of " + e.vertex);
        }
        for (int j = 0; j < k; ++j) {
          const SimPoint& p = row[e.pos - 1 + j];
          if (p.up) return fail(i, "vertex consumes an up-directed strand");
          if (p.edge != e.ins[j]) return fail(i, "vertex in-strand mismatch");
        }
        for (int j = 0; j < k; ++j) kill(row[e.pos - 1 + j].inst, i);
        row.erase(row.begin() + (e.pos - 1), row.begin() + (e.pos - 1 + k));
        std::vector<SimPoint> outs;
        for (const auto& id : e.outs) outs.push_back({id, false, new_inst(id, false, i)});
        row.insert(row.begin() + (e.pos - 1), outs.begin(), outs.end());
        break;
      }
    }
    record_row();
  }
  if (!row.empty()) return fail(s.events.size() ? s.events.size() - 1 : 0,
                                "row not empty after final event");

  // Every vertex must occur exactly once, every edge as one connected strand.
  for (const auto& v : s.graph.vertices)
    if (!seen_vertices.count(v))
      return fail(0, "vertex " + v + " has no event");
  if (trace) {
    // Walk each edge from its tail emission; the chain through min/max links
    // must cover all of the edge's instances.
    std::map<std::string, std::vector<int>> by_edge;
    for (int id = 0; id < (int)trace->instances.size(); ++id)
      by_edge[trace->instances[id].edge].push_back(id);
    for (const auto& e : s.graph.edges) {
      const auto& insts = by_edge[e.id];
      // Pair instances born/dying at the same Max/Min event.
      std::map<std::size_t, std::vector<int>> birth, death;
      int start = -1;
      for (int id : insts) {
        const auto& inst = trace->instances[id];
        const Event& be = s.events[inst.birth_event];
        if (be.kind == Event::Kind::Vertex) {
          if (start != -1) return fail(inst.birth_event, "edge " + e.id + " emitted twice");
          start = id;
        } else {
          birth[inst.birth_event].push_back(id);
        }
        const Event& de = s.events[inst.death_event];
        if (de.kind != Event::Kind::Vertex) death[inst.death_event].push_back(id);
      }
      if (start == -1) {
        if (!insts.empty()) return fail(0, "edge " + e.id + " has strands but no emission");
        return fail(0, "edge " + e.id + " never drawn");
      }
      std::set<int> visited;
      int cur = start;
      while (true) {
        visited.insert(cur);
        const auto& inst = trace->instances[cur];
        // Follow orientation: a down instance is traversed birth->death, an
        // up instance death->birth.
        std::size_t next_event = inst.up ? inst.birth_event : inst.death_event;
        const Event& ne = s.events[next_event];
        if (ne.kind == Event::Kind::Vertex) break;  // reached the head
        const auto& pool = inst.up ? birth[next_event] : death[next_event];
        int partner = -1;
        for (int id : pool)
          if (id != cur) partner = id;
        if (partner < 0) return fail(next_event, "edge " + e.id + " chain broken");
        cur = partner;
      }
      if (visited.size() != insts.size())
        return fail(0, "edge " + e.id + " strand is disconnected");
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_sliced(const SlicedDiagram& s) {
  ValidationReport rep;
  try {
    check_graph(s.graph);
  } catch (const std::runtime_error& e) {
    rep.ok = false;
    rep.message = e.what();
    return rep;
  }
  if (has_isolated_vertex(s.graph)) {
    rep.ok = false;
    rep.message = "graph has isolated vertices";
    return rep;
  }
  Trace t;  // full trace so the connectivity checks run
  simulate(s, &t, &rep);
  return rep;
}

void require_valid(const SlicedDiagram& s) {
  auto rep = validate_sliced(s);
  if (!rep.ok)
    throw std::runtime_error("invalid diagram " + s.name + " (event " +
                             std::to_string(rep.event_index) + "): " + rep.message);
}

OrientedGraph underlying_graph(const SlicedDiagram& s) {
  require_valid(s);
  OrientedGraph g;
  g.name = s.name;
  std::map<std::string, std::pair<std::string, std::string>> ends;  // edge -> (tail, head)
  for (const auto& e : s.events) {
    if (e.kind != Event::Kind::Vertex) continue;
    g.vertices.push_back(e.vertex);
    for (const auto& id : e.outs) ends[id].first = e.vertex;
    for (const auto& id : e.ins) ends[id].second = e.vertex;
  }
  for (const auto& [id, th] : ends) g.edges.push_back({id, th.first, th.second});
  return g;
}

Trace trace_strands(const SlicedDiagram& s) {
  ValidationReport rep;
  Trace t;
  if (!simulate(s, &t, &rep))
    throw std::runtime_error("invalid diagram (event " + std::to_string(rep.event_index) +
                             "): " + rep.message);
  return t;
}

namespace {

// Direction vector of a strand at a crossing, by incoming side and direction.
struct Dir2 { int x, y; };

Dir2 strand_dir(bool left_incoming, bool up) {
  // Left-incoming travels upper-left -> lower-right when down-directed.
  if (left_incoming) return up ? Dir2{-1, 1} : Dir2{1, -1};
  return up ? Dir2{1, 1} : Dir2{-1, -1};
}

int sign_from(const Trace& t, const Trace::CrossInfo& c, const Event& e) {
  bool left_up = t.instances[c.left_inst].up;
  bool right_up = t.instances[c.right_inst].up;
  bool left_over = e.over == Event::Side::Left;
  Dir2 over = strand_dir(left_over, left_over ? left_up : right_up);
  Dir2 under = strand_dir(!left_over, left_over ? right_up : left_up);
  // Quarter turn counterclockwise: (x, y) -> (-y, x).
  Dir2 rot{-under.y, under.x};
  return (rot.x == over.x && rot.y == over.y) ? 1 : -1;
}

}  // namespace

int crossing_sign(const SlicedDiagram& s, std::size_t event_index) {
  if (event_index >= s.events.size() || s.events[event_index].kind != Event::Kind::Cross)
    throw std::invalid_argument("crossing_sign: event is not a crossing");
  Trace t = trace_strands(s);
  for (const auto& c : t.crossings)
    if (c.event == event_index) return sign_from(t, c, s.events[event_index]);
  throw std::logic_error("crossing_sign: crossing not found in trace");
}

bool is_cycle_edge_set(const OrientedGraph& g, const std::vector<std::string>& cycle) {
  if (cycle.empty()) return false;
  std::set<std::string> ids(cycle.begin(), cycle.end());
  if (ids.size() != cycle.size()) return false;
  std::map<std::string, int> deg;
  std::map<std::string, std::string> rep;  // vertex -> union-find parent
  std::function<std::string(const std::string&)> find = [&](const std::string& v) {
    return rep[v] == v ? v : rep[v] = find(rep[v]);
  };
  for (const auto& id : ids) {
    const auto* e = g.find_edge(id);
    if (!e) return false;
    deg[e->tail] += 1;
    deg[e->head] += 1;
    if (!rep.count(e->tail)) rep[e->tail] = e->tail;
    if (!rep.count(e->head)) rep[e->head] = e->head;
    rep[find(e->tail)] = find(e->head);
  }
  for (const auto& [v, d] : deg)
    if (d != 2) return false;
  std::set<std::string> roots;
  for (const auto& [v, r] : rep) roots.insert(find(v));
  return roots.size() == 1;
}

bool cycles_disjoint(const OrientedGraph& g, const std::vector<std::string>& c1,
                     const std::vector<std::string>& c2) {
  std::set<std::string> v1, v2, e1(c1.begin(), c1.end()), e2(c2.begin(), c2.end());
  for (const auto& id : e1)
    if (e2.count(id)) return false;
  for (const auto& id : c1) {
    const auto* e = g.find_edge(id);
    if (!e) return false;
    v1.insert(e->tail);
    v1.insert(e->head);
  }
  for (const auto& id : c2) {
    const auto* e = g.find_edge(id);
    if (!e) return false;
    v2.insert(e->tail);
    v2.insert(e->head);
  }
  for (const auto& v : v1)
    if (v2.count(v)) return false;
  return true;
}

int linking_number(const SlicedDiagram& s, const std::vector<std::string>& cycle1,
                   const std::vector<std::string>& cycle2) {
  OrientedGraph g = underlying_graph(s);
  if (!is_cycle_edge_set(g, cycle1) || !is_cycle_edge_set(g, cycle2))
    throw std::invalid_argument("linking_number: arguments are not cycles");
  if (!cycles_disjoint(g, cycle1, cycle2))
    throw std::invalid_argument("linking_number: cycles are not disjoint");
  std::set<std::string> e1(cycle1.begin(), cycle1.end()), e2(cycle2.begin(), cycle2.end());
  Trace t = trace_strands(s);
  int sum = 0;
  for (const auto& c : t.crossings) {
    const auto& el = t.instances[c.left_inst].edge;
    const auto& er = t.instances[c.right_inst].edge;
    bool mixed = (e1.count(el) && e2.count(er)) || (e2.count(el) && e1.count(er));
    if (mixed) sum += sign_from(t, c, s.events[c.event]);
  }
  if (sum % 2 != 0) throw std::logic_error("linking_number: odd crossing sum");
  return sum / 2;
}

int critical_points(const SlicedDiagram& s, const std::vector<std::string>& cycle) {
  OrientedGraph g = underlying_graph(s);
  if (!is_cycle_edge_set(g, cycle))
    throw std::invalid_argument("critical_points: not a cycle");
  std::set<std::string> ids(cycle.begin(), cycle.end());
  int n = 0;
  for (const auto& e : s.events)
    if ((e.kind == Event::Kind::Max || e.kind == Event::Kind::Min) && ids.count(e.edge)) ++n;
  return n;
}

std::vector<UpwardArc> upward_arcs(const SlicedDiagram& s) {
  Trace t = trace_strands(s);
  std::vector<UpwardArc> arcs;
  for (int id = 0; id < (int)t.instances.size(); ++id) {
    const auto& inst = t.instances[id];
    if (!inst.up) continue;
    arcs.push_back({inst.edge, id, inst.birth_event, inst.death_event});
  }
  return arcs;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> parse_id_list(const std::string& tok, const std::string& prefix,
                                       int lineno) {
  // prefix=(a,b,c) with possibly empty ().
  if (tok.rfind(prefix + "=(", 0) != 0 || tok.back() != ')')
    throw parse_error(lineno, "expected " + prefix + "=(...)");
  std::string body = tok.substr(prefix.size() + 2, tok.size() - prefix.size() - 3);
  std::vector<std::string> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      if (cur.empty()) throw parse_error(lineno, "empty id in list");
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

SlicedDiagram parse_sliced(std::string_view text, const std::string& base_dir) {
  SlicedDiagram s;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_graph = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& k = toks[0];
    if (k == "sliced") {
      if (toks.size() != 2) throw parse_error(lineno, "expected: sliced <name>");
      s.name = toks[1];
    } else if (k == "use") {
      if (toks.size() != 3 || toks[1] != "graph")
        throw parse_error(lineno, "expected: use graph <file|inline>");
      if (toks[2] == "inline") {
        std::ostringstream body;
        bool closed = false;
        while (std::getline(in, line)) {
          ++lineno;
          auto t2 = split_ws(line);
          if (!t2.empty() && t2[0] == "end") {
            closed = true;
            break;
          }
          body << line << "\n";
        }
        if (!closed) throw parse_error(lineno, "unterminated inline graph");
        s.graph = parse_graph(body.str());
      } else {
        std::ifstream f(base_dir + "/" + toks[2]);
        if (!f) throw parse_error(lineno, "cannot open graph file " + toks[2]);
        std::ostringstream body;
        body << f.rdbuf();
        s.graph = parse_graph(body.str());
      }
      have_graph = true;
    } else if (k == "max") {
      if (toks.size() != 4) throw parse_error(lineno, "expected: max <pos> <edge> down=<left|right>");
      Event::Side side;
      if (toks[3] == "down=left") side = Event::Side::Left;
      else if (toks[3] == "down=right") side = Event::Side::Right;
      else throw parse_error(lineno, "bad down= flag");
      s.events.push_back(Event::max(std::stoi(toks[1]), toks[2], side));
    } else if (k == "min") {
      if (toks.size() != 3) throw parse_error(lineno, "expected: min <pos> <edge>");
      s.events.push_back(Event::min(std::stoi(toks[1]), toks[2]));
    } else if (k == "x") {
      if (toks.size() != 3) throw parse_error(lineno, "expected: x <pos> over=<l|r>");
      Event::Side over;
      if (toks[2] == "over=l") over = Event::Side::Left;
      else if (toks[2] == "over=r") over = Event::Side::Right;
      else throw parse_error(lineno, "bad over= flag");
      s.events.push_back(Event::cross(std::stoi(toks[1]), over));
    } else if (k == "vtx") {
      if (toks.size() != 5) throw parse_error(lineno, "expected: vtx <vertex> <pos> in=(...) out=(...)");
      auto ins = parse_id_list(toks[3], "in", lineno);
      auto outs = parse_id_list(toks[4], "out", lineno);
      s.events.push_back(Event::vertex_event(toks[1], std::stoi(toks[2]), ins, outs));
    } else {
      throw parse_error(lineno, "unknown directive: " + k);
    }
  }
  if (!have_graph) throw parse_error(lineno, "missing 'use graph' section");
  return s;
}

std::string serialize_sliced(const SlicedDiagram& s) {
  std::ostringstream out;
  out << "sliced " << s.name << "\n";
  out << "use graph inline\n";
  // Inline graph body reuses the normalized .sgg form minus its header line.
  std::istringstream g(serialize_graph(s.graph));
  std::string line;
  std::getline(g, line);  // drop "graph <name>"
  while (std::getline(g, line)) out << line << "\n";
  out << "end\n";
  for (const auto& e : s.events) {
    switch (e.kind) {
      case Event::Kind::Max:
        out << "max " << e.pos << " " << e.edge << " down="
            << (e.down_side == Event::Side::Left ? "left" : "right") << "\n";
        break;
      case Event::Kind::Min:
        out << "min " << e.pos << " " << e.edge << "\n";
        break;
      case Event::Kind::Cross:
        out << "x " << e.pos << " over=" << (e.over == Event::Side::Left ? "l" : "r") << "\n";
        break;
      case Event::Kind::Vertex: {
        out << "vtx " << e.vertex << " " << e.pos << " in=(";
        for (std::size_t i = 0; i < e.ins.size(); ++i) out << (i ? "," : "") << e.ins[i];
        out << ") out=(";
        for (std::size_t i = 0; i < e.outs.size(); ++i) out << (i ? "," : "") << e.outs[i];
        out << ")\n";
        break;
      }
    }
  }
  return out.str();
}

}  // namespace sg
