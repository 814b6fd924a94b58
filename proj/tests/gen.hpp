#pragma once

// Random graphs, diagrams and words for the property suites.  The canonical
// diagram routes every edge over the top of the picture: one max per edge,
// vertices in id order, in-strands bubbled together with crossings, and one
// min per edge at the bottom.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sg/braid.hpp"
#include "sg/moves.hpp"
#include "sg/sliced.hpp"

namespace sgtest {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct CanonBuilder {
  struct Point {
    std::string edge;
    int role;  // 0 head-bound descent, 1 ascent, 2 tail descent
  };
  std::vector<Point> row;
  std::vector<sg::Event> events;

  int find(const std::string& edge, int role) const {
    for (int i = 0; i < (int)row.size(); ++i)
      if (row[i].edge == edge && row[i].role == role) return i;
    return -1;
  }
  // Moves the point at `from` to position `to` with crossings (over = left).
  void bubble(int from, int to) {
    while (from > to) {
      events.push_back(sg::Event::cross(from, sg::Event::Side::Left));
      std::swap(row[from - 1], row[from]);
      --from;
    }
    while (from < to) {
      events.push_back(sg::Event::cross(from + 1, sg::Event::Side::Left));
      std::swap(row[from], row[from + 1]);
      ++from;
    }
  }
};

inline sg::SlicedDiagram canonical_diagram(const sg::OrientedGraph& g) {
  sg::SlicedDiagram s;
  s.name = g.name + "_canon";
  s.graph = g;
  CanonBuilder b;

  auto edges = g.edges;
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& c) { return a.id < c.id; });
  // One cap per edge: the head-bound arm descends, the ascent waits for the
  // tail arm.
  for (const auto& e : edges) {
    b.events.push_back(sg::Event::max(1, e.id, sg::Event::Side::Left));
    b.row.insert(b.row.begin(), {{e.id, 0}, {e.id, 1}});
  }
  auto vertices = g.vertices;
  std::sort(vertices.begin(), vertices.end());
  for (const auto& v : vertices) {
    auto ins = g.in_edges(v);
    auto outs = g.out_edges(v);
    std::sort(ins.begin(), ins.end());
    std::sort(outs.begin(), outs.end());
    for (int j = 0; j < (int)ins.size(); ++j)
      b.bubble(b.find(ins[j], 0), j);
    b.events.push_back(sg::Event::vertex_event(v, 1, ins, outs));
    b.row.erase(b.row.begin(), b.row.begin() + ins.size());
    for (int j = 0; j < (int)outs.size(); ++j)
      b.row.insert(b.row.begin() + j, {outs[j], 2});
  }
  for (const auto& e : edges) {
    int up = b.find(e.id, 1);
    int tail = b.find(e.id, 2);
    if (tail < up) {
      b.bubble(tail, up - 1);
      b.events.push_back(sg::Event::min(up, e.id));
      b.row.erase(b.row.begin() + up - 1, b.row.begin() + up + 1);
    } else {
      b.bubble(tail, up + 1);
      b.events.push_back(sg::Event::min(up + 1, e.id));
      b.row.erase(b.row.begin() + up, b.row.begin() + up + 2);
    }
  }
  s.events = std::move(b.events);
  sg::require_valid(s);
  return s;
}

inline sg::OrientedGraph random_graph(Rng& rng, int max_vertices = 4, int max_edges = 8) {
  sg::OrientedGraph g;
  g.name = "rnd";
  int nv = pick(rng, 1, max_vertices);
  for (int i = 0; i < nv; ++i) g.vertices.push_back("v" + std::to_string(i + 1));
  int ne = pick(rng, 1, max_edges);
  for (int i = 0; i < ne; ++i) {
    std::string t = g.vertices[pick(rng, 0, nv - 1)];
    std::string h = g.vertices[pick(rng, 0, nv - 1)];
    g.edges.push_back({"e" + std::to_string(i + 1), t, h});
  }
  // drop isolated vertices
  std::set<std::string> touched;
  for (const auto& e : g.edges) {
    touched.insert(e.tail);
    touched.insert(e.head);
  }
  std::vector<std::string> kept;
  for (const auto& v : g.vertices)
    if (touched.count(v)) kept.push_back(v);
  g.vertices = kept;
  return g;
}

inline sg::OrientedGraph random_circulating_graph(Rng& rng, int max_vertices = 4,
                                                  int max_cycles = 3) {
  sg::OrientedGraph g;
  g.name = "circ";
  int nv = pick(rng, 1, max_vertices);
  for (int i = 0; i < nv; ++i) g.vertices.push_back("v" + std::to_string(i + 1));
  int ncyc = pick(rng, 1, max_cycles);
  int eid = 0;
  std::set<std::string> touched;
  for (int c = 0; c < ncyc; ++c) {
    int len = pick(rng, 1, nv);
    std::vector<int> idx(nv);
    for (int i = 0; i < nv; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(len);
    for (int i = 0; i < len; ++i) {
      const auto& t = g.vertices[idx[i]];
      const auto& h = g.vertices[idx[(i + 1) % len]];
      g.edges.push_back({"e" + std::to_string(++eid), t, h});
      touched.insert(t);
      touched.insert(h);
    }
  }
  std::vector<std::string> kept;
  for (const auto& v : g.vertices)
    if (touched.count(v)) kept.push_back(v);
  g.vertices = kept;
  return g;
}

inline int crossing_count(const sg::SlicedDiagram& s) {
  int n = 0;
  for (const auto& e : s.events) n += e.kind == sg::Event::Kind::Cross;
  return n;
}

// Scrambles a diagram with random moves, keeping the crossing count bounded.
// Move instances are sampled directly rather than enumerated, so each step
// costs a handful of apply attempts.
inline sg::SlicedDiagram scramble(Rng& rng, sg::SlicedDiagram s, int moves, int max_cross = 12) {
  using MK = sg::MoveInstance::Kind;
  const MK kinds[] = {MK::MinMaxAdd, MK::R1Add,  MK::R2Add,        MK::R5Twist, MK::Exchange,
                      MK::R3,        MK::R4Slide, MK::MinMaxCancel, MK::R1Remove, MK::R2Remove};
  for (int i = 0; i < moves; ++i) {
    int n = (int)s.events.size();
    std::vector<int> widths{0};
    for (const auto& e : s.events) {
      int d = 0;
      switch (e.kind) {
        case sg::Event::Kind::Max: d = 2; break;
        case sg::Event::Kind::Min: d = -2; break;
        case sg::Event::Kind::Cross: d = 0; break;
        case sg::Event::Kind::Vertex: d = (int)e.outs.size() - (int)e.ins.size(); break;
      }
      widths.push_back(widths.back() + d);
    }
    for (int attempt = 0; attempt < 40; ++attempt) {
      sg::MoveInstance m;
      m.kind = kinds[pick(rng, 0, 9)];
      m.at = pick(rng, 0, n);
      int w = widths[std::min<std::size_t>(m.at, widths.size() - 1)];
      m.pos = pick(rng, 1, std::max(1, w));
      m.form = pick(rng, 0, 7);
      auto next = sg::apply_move(s, m);
      if (!next || crossing_count(*next) > max_cross) continue;
      s = std::move(*next);
      break;
    }
  }
  return s;
}

inline sg::SlicedDiagram random_diagram(Rng& rng, int moves = 6, int max_cross = 12) {
  auto g = random_graph(rng);
  return scramble(rng, canonical_diagram(g), moves, max_cross);
}

inline sg::SlicedDiagram random_circulating_diagram(Rng& rng, int moves = 5) {
  auto g = random_circulating_graph(rng);
  return scramble(rng, canonical_diagram(g), moves);
}

// Random vertex-free braid word: crossings only.
inline sg::GraphBraidWord random_link_word(Rng& rng, int max_strands = 5, int max_letters = 10) {
  sg::GraphBraidWord w;
  w.name = "rndword";
  w.strands0 = pick(rng, 1, max_strands);
  if (w.strands0 >= 2) {
    int n = pick(rng, 0, max_letters);
    for (int i = 0; i < n; ++i) {
      sg::BraidLetter t;
      t.kind = sg::BraidLetter::Kind::Cross;
      t.index = pick(rng, 1, w.strands0 - 1);
      t.sign = pick(rng, 0, 1) ? 1 : -1;
      w.letters.push_back(t);
    }
  }
  return w;
}

// True iff some crossing's over strand is up-directed (those diagrams braid
// with extra wraps; see the braiding notes).
inline bool has_up_over_crossing(const sg::SlicedDiagram& s) {
  auto t = sg::trace_strands(s);
  for (const auto& c : t.crossings) {
    const auto& e = s.events[c.event];
    bool left_over = e.over == sg::Event::Side::Left;
    int over_inst = left_over ? c.left_inst : c.right_inst;
    if (t.instances[over_inst].up) return true;
  }
  return false;
}

}  // namespace sgtest
