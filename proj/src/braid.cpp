#include "sg/braid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sg {

// ---------------------------------------------------------------------------
// Word extraction.  The annular form is read with the horizontals virtually
// tilted downward along travel and the axis far to the right; in that reading
// the fiber sweep visits letters in row order (top to bottom), ties on one
// horizontal broken along its travel, and a letter's strand index is one plus
// the number of strand pieces crossing the fiber strictly nearer the axis,
// i.e. strictly to its right.

namespace {

struct RawLetter {
  Vec2 p;
  bool is_cross = false;
  int cross_idx = -1;  // into layout.crossings
  int fan_idx = -1;    // into layout.fans
};

// Does this span contain the fiber height py nudged toward y0?
bool spans_nudged(Rat lo, Rat hi, const Rat& py, bool nudge_down) {
  return nudge_down ? (lo < py && py <= hi) : (lo <= py && py < hi);
}

// Strand index of the letter at p: one plus the strand pieces crossing the
// fiber strictly nearer the axis.  For a crossing letter, the over strand
// meets this fiber at p itself, so the verticals hanging off its horizontal's
// endpoints are not counted.
int fiber_rank(const RectLayout& l, const Vec2& p, const Seg* own_h) {
  bool nudge_down = p.y > l.origin.y;
  int count = 0;
  for (const auto& s : l.segs) {
    if (!s.vertical()) continue;
    if (s.a.x <= p.x) continue;
    if (s.wrap && s.a.x > l.origin.x) continue;  // seam strands sit behind the axis
    if (own_h && (s.a == own_h->a || s.a == own_h->b || s.b == own_h->a || s.b == own_h->b))
      continue;
    Rat lo = std::min(s.a.y, s.b.y), hi = std::max(s.a.y, s.b.y);
    if (spans_nudged(lo, hi, p.y, nudge_down)) ++count;
  }
  for (const auto& f : l.fans) {
    auto chord = [&](const Vec2& a, const Vec2& b) {
      if (a == p || b == p) return;  // the letter's own fan
      Rat lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
      if (!spans_nudged(lo, hi, p.y, nudge_down)) return;
      Rat x;
      if (p.y == hi || p.y == lo) {
        x = (a.y == p.y) ? a.x : b.x;  // the nudged fiber exits at the endpoint
      } else {
        x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      }
      if (x > p.x) ++count;
    };
    for (const auto& sl : f.ins) chord(sl.attach, f.p);
    for (const auto& sl : f.outs) chord(f.p, sl.attach);
  }
  return count + 1;
}

}  // namespace

GraphBraidWord extract_word(const RectLayout& l) {
  if (!l.annular) throw std::invalid_argument("extract_word: layout is not annular");
  for (const auto& c : l.crossings)
    if (!c.horizontal_over)
      throw std::invalid_argument("extract_word: layout has a vertical-over crossing");

  std::vector<RawLetter> raws;
  for (int i = 0; i < (int)l.crossings.size(); ++i)
    raws.push_back({l.crossings[i].p, true, i, -1});
  for (int i = 0; i < (int)l.fans.size(); ++i) raws.push_back({l.fans[i].p, false, -1, i});

  std::sort(raws.begin(), raws.end(), [&](const RawLetter& a, const RawLetter& b) {
    if (a.p.y != b.p.y) return b.p.y < a.p.y;  // higher row first
    // same row: both are crossings on the unique horizontal there
    const Seg& h = l.segs[l.crossings[a.cross_idx].h_seg];
    bool travel_right = h.a.x < h.b.x;
    return travel_right ? a.p.x < b.p.x : b.p.x < a.p.x;
  });

  GraphBraidWord w;
  w.strands0 = l.wrap_count;
  for (const auto& r : raws) {
    BraidLetter letter;
    const Seg* own_h = r.is_cross ? &l.segs[l.crossings[r.cross_idx].h_seg] : nullptr;
    letter.index = fiber_rank(l, r.p, own_h);
    if (r.is_cross) {
      const auto& c = l.crossings[r.cross_idx];
      const Seg& h = l.segs[c.h_seg];
      letter.kind = BraidLetter::Kind::Cross;
      letter.sign = h.a.x < h.b.x ? 1 : -1;  // over strand is outer-before iff it travels right
    } else {
      const Fan& f = l.fans[r.fan_idx];
      letter.kind = BraidLetter::Kind::Vertex;
      letter.vertex = f.vertex;
      for (auto it = f.ins.rbegin(); it != f.ins.rend(); ++it) letter.ins.push_back(it->edge);
      for (auto it = f.outs.rbegin(); it != f.outs.rend(); ++it) letter.outs.push_back(it->edge);
    }
    w.letters.push_back(std::move(letter));
  }
  return w;
}

GraphBraidWord braid(const SlicedDiagram& s) {
  if (has_isolated_vertex(s.graph)) throw std::invalid_argument("braid: isolated vertices");
  RectLayout l = rectilinear_layout(s);
  l = normalize_crossings(std::move(l));
  l = isolate_up_columns(std::move(l));
  l = wrap_up_segments(std::move(l));
  validate_layout(l);
  if (!monotone_certificate(l)) throw std::logic_error("braid: monotonicity certificate failed");
  GraphBraidWord w = extract_word(l);
  w.name = s.name;
  auto wc = validate_word(w);
  if (!wc.ok) throw std::logic_error("braid: extracted word invalid: " + wc.message);
  return w;
}

// ---------------------------------------------------------------------------
// Word validation with label propagation.

namespace {

struct LabelUf {
  std::vector<int> parent;
  std::vector<std::string> value;  // edge id or empty
  std::vector<std::pair<int, std::string>> assignments;
  std::string err;

  int make() {
    parent.push_back((int)parent.size());
    value.emplace_back();
    return (int)parent.size() - 1;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool assign(int a, const std::string& e) {
    assignments.push_back({a, e});
    a = find(a);
    if (!value[a].empty()) {
      if (value[a] != e) {
        err = "edge-label discontinuity: " + value[a] + " vs " + e;
        return false;
      }
      return true;
    }
    value[a] = e;
    return true;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (!value[a].empty() && !value[b].empty() && value[a] != value[b]) {
      err = "edge-label discontinuity: " + value[a] + " vs " + value[b];
      return false;
    }
    if (value[a].empty()) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  // After all unions: every mention of an edge must sit in one class.
  bool runs_contiguous() {
    std::map<std::string, int> root_of;
    for (auto& [v, e] : assignments) {
      int r = find(v);
      auto it = root_of.find(e);
      if (it == root_of.end())
        root_of[e] = r;
      else if (it->second != r) {
        err = "edge " + e + " labels two separate strand runs";
        return false;
      }
    }
    return true;
  }
};

}  // namespace

WordCheck validate_word(const GraphBraidWord& w) {
  WordCheck wc;
  auto fail = [&](const std::string& m) {
    wc.ok = false;
    wc.message = m;
    return wc;
  };
  if (w.strands0 < 0) return fail("negative strand count");

  LabelUf uf;
  std::vector<int> slots;  // innermost first
  for (int i = 0; i < w.strands0; ++i) slots.push_back(uf.make());
  std::vector<int> seam = slots;

  std::set<std::string> vertex_ids;
  std::map<std::string, std::string> emitted_by, consumed_by;
  std::vector<std::vector<int>> gap_vars;
  gap_vars.push_back(slots);

  for (std::size_t li = 0; li < w.letters.size(); ++li) {
    const BraidLetter& t = w.letters[li];
    int count = (int)slots.size();
    if (t.kind == BraidLetter::Kind::Cross) {
      if (t.index < 1 || t.index + 1 > count)
        return fail("crossing index out of range at letter " + std::to_string(li));
      std::swap(slots[t.index - 1], slots[t.index]);
    } else {
      int k = (int)t.ins.size(), q = (int)t.outs.size();
      if (t.vertex.empty()) return fail("vertex letter without id");
      if (!vertex_ids.insert(t.vertex).second)
        return fail("vertex " + t.vertex + " appears twice");
      if (t.index < 1 || t.index - 1 + k > count || (k == 0 && t.index > count + 1))
        return fail("vertex index out of range at letter " + std::to_string(li));
      for (int j = 0; j < k; ++j) {
        const std::string& e = t.ins[j];
        if (consumed_by.count(e)) return fail("edge " + e + " consumed twice");
        consumed_by[e] = t.vertex;
        if (!uf.assign(slots[t.index - 1 + j], e)) return fail(uf.err);
      }
      slots.erase(slots.begin() + (t.index - 1), slots.begin() + (t.index - 1 + k));
      std::vector<int> fresh;
      for (int j = 0; j < q; ++j) {
        const std::string& e = t.outs[j];
        if (emitted_by.count(e)) return fail("edge " + e + " emitted twice");
        emitted_by[e] = t.vertex;
        int v = uf.make();
        if (!uf.assign(v, e)) return fail(uf.err);
        fresh.push_back(v);
      }
      slots.insert(slots.begin() + (t.index - 1), fresh.begin(), fresh.end());
    }
    gap_vars.push_back(slots);
  }
  if ((int)slots.size() != w.strands0) return fail("count mismatch at seam");
  for (int i = 0; i < w.strands0; ++i)
    if (!uf.unite(slots[i], seam[i])) return fail(uf.err);
  if (!uf.runs_contiguous()) return fail(uf.err);

  for (const auto& [e, v] : emitted_by)
    if (!consumed_by.count(e)) return fail("edge " + e + " never consumed");
  for (const auto& [e, v] : consumed_by)
    if (!emitted_by.count(e)) return fail("edge " + e + " never emitted");

  // Vertex-free components get a synthesized 2-valent vertex and loop edge.
  std::set<std::string> used_ids(vertex_ids.begin(), vertex_ids.end());
  for (const auto& [e, v] : emitted_by) used_ids.insert(e);
  std::map<int, int> root_first_seam;
  for (int i = 0; i < w.strands0; ++i) {
    int r = uf.find(seam[i]);
    if (!root_first_seam.count(r)) root_first_seam[r] = i;
  }
  int synth_n = 0;
  for (auto& [r, first] : root_first_seam) {
    if (!uf.value[r].empty()) continue;
    ++synth_n;
    std::string v = "c" + std::to_string(synth_n);
    while (used_ids.count(v)) v += "x";
    used_ids.insert(v);
    std::string e = "e_" + v;
    while (used_ids.count(e)) e += "x";
    used_ids.insert(e);
    uf.value[r] = e;
    wc.synthesized.emplace_back(v, e, first);
    emitted_by[e] = v;
    consumed_by[e] = v;
    wc.graph.vertices.push_back(v);
  }
  // Any remaining valueless class would be a strand with no edge at all.
  for (const auto& gv : gap_vars)
    for (int vv : gv)
      if (uf.value[uf.find(vv)].empty()) return fail("strand with no edge label");

  for (const auto& t : w.letters)
    if (t.kind == BraidLetter::Kind::Vertex) wc.graph.vertices.push_back(t.vertex);
  std::sort(wc.graph.vertices.begin(), wc.graph.vertices.end());
  for (const auto& [e, v] : emitted_by) wc.graph.edges.push_back({e, v, consumed_by.at(e)});
  wc.graph.name = w.name;

  for (const auto& gv : gap_vars) {
    std::vector<std::string> labels;
    for (int vv : gv) labels.push_back(uf.value[uf.find(vv)]);
    wc.gap_edges.push_back(std::move(labels));
  }
  wc.seam_edges = wc.gap_edges.front();
  return wc;
}

int b_tilde(const GraphBraidWord& w) {
  auto wc = validate_word(w);
  if (!wc.ok) throw std::invalid_argument("b_tilde: invalid word: " + wc.message);
  int count = w.strands0, best = count;
  for (const auto& t : w.letters) {
    if (t.kind == BraidLetter::Kind::Vertex) count += (int)t.outs.size() - (int)t.ins.size();
    best = std::max(best, count);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Closure: render the word as a descending tangle between nested maxima and
// minima; strand 1 (innermost) closes along the tightest return arc.

SlicedDiagram closure(const GraphBraidWord& w) {
  auto wc = validate_word(w);
  if (!wc.ok) throw std::invalid_argument("closure: invalid word: " + wc.message);
  int m = w.strands0;

  SlicedDiagram s;
  s.name = w.name + "_cl";
  s.graph = wc.graph;

  for (int j = 1; j <= m; ++j)
    s.events.push_back(Event::max(j, wc.seam_edges[m - j], Event::Side::Left));
  // Synthesized vertices sit on their component's strand right below the caps.
  for (const auto& [v, e, seam_idx] : wc.synthesized)
    s.events.push_back(Event::vertex_event(v, m - seam_idx, {e}, {e}));

  int count = m;
  for (const BraidLetter& t : w.letters) {
    if (t.kind == BraidLetter::Kind::Cross) {
      s.events.push_back(
          Event::cross(count - t.index, t.sign > 0 ? Event::Side::Left : Event::Side::Right));
    } else {
      int k = (int)t.ins.size(), q = (int)t.outs.size();
      std::vector<std::string> ins(t.ins.rbegin(), t.ins.rend());
      std::vector<std::string> outs(t.outs.rbegin(), t.outs.rend());
      s.events.push_back(
          Event::vertex_event(t.vertex, count + 2 - t.index - k, std::move(ins), std::move(outs)));
      count += q - k;
    }
  }
  for (int j = 1; j <= m; ++j) s.events.push_back(Event::min(m + 1 - j, wc.seam_edges[j - 1]));
  require_valid(s);
  return s;
}

// ---------------------------------------------------------------------------
// Text format.

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> parse_id_list(const std::string& tok, const std::string& prefix,
                                       int lineno) {
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

}  // namespace

GraphBraidWord parse_braidword(std::string_view text) {
  GraphBraidWord w;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_strands = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "braidword") {
      if (toks.size() != 2) throw parse_error(lineno, "expected: braidword <name>");
      w.name = toks[1];
    } else if (toks[0] == "strands0") {
      if (toks.size() != 2) throw parse_error(lineno, "expected: strands0 <n>");
      w.strands0 = std::stoi(toks[1]);
      have_strands = true;
    } else if (toks[0] == "x") {
      if (toks.size() != 3 || (toks[2] != "+" && toks[2] != "-"))
        throw parse_error(lineno, "expected: x <index> <+|->");
      BraidLetter t;
      t.kind = BraidLetter::Kind::Cross;
      t.index = std::stoi(toks[1]);
      t.sign = toks[2] == "+" ? 1 : -1;
      w.letters.push_back(t);
    } else if (toks[0] == "v") {
      if (toks.size() != 5)
        throw parse_error(lineno, "expected: v <vertex> <index> in=(...) out=(...)");
      BraidLetter t;
      t.kind = BraidLetter::Kind::Vertex;
      t.vertex = toks[1];
      t.index = std::stoi(toks[2]);
      t.ins = parse_id_list(toks[3], "in", lineno);
      t.outs = parse_id_list(toks[4], "out", lineno);
      w.letters.push_back(t);
    } else {
      throw parse_error(lineno, "unknown directive: " + toks[0]);
    }
  }
  if (!have_strands) throw parse_error(lineno, "missing strands0");
  return w;
}

std::string serialize_braidword(const GraphBraidWord& w) {
  std::ostringstream out;
  out << "braidword " << w.name << "\n";
  out << "strands0 " << w.strands0 << "\n";
  for (const auto& t : w.letters) {
    if (t.kind == BraidLetter::Kind::Cross) {
      out << "x " << t.index << " " << (t.sign > 0 ? "+" : "-") << "\n";
    } else {
      out << "v " << t.vertex << " " << t.index << " in=(";
      for (std::size_t i = 0; i < t.ins.size(); ++i) out << (i ? "," : "") << t.ins[i];
      out << ") out=(";
      for (std::size_t i = 0; i < t.outs.size(); ++i) out << (i ? "," : "") << t.outs[i];
      out << ")\n";
    }
  }
  return out.str();
}

}  // namespace sg
