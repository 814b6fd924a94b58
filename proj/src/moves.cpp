#include "sg/moves.hpp"

#include <algorithm>
#include <map>

namespace sg {

namespace {

using K = MoveInstance::Kind;
using Side = Event::Side;

int consumed(const Event& e) {
  switch (e.kind) {
    case Event::Kind::Max: return 0;
    case Event::Kind::Min: return 2;
    case Event::Kind::Cross: return 2;
    case Event::Kind::Vertex: return (int)e.ins.size();
  }
  return 0;
}
int inserted(const Event& e) {
  switch (e.kind) {
    case Event::Kind::Max: return 2;
    case Event::Kind::Min: return 0;
    case Event::Kind::Cross: return 2;
    case Event::Kind::Vertex: return (int)e.outs.size();
  }
  return 0;
}
int delta(const Event& e) { return inserted(e) - consumed(e); }

std::vector<int> row_lengths(const SlicedDiagram& s) {
  std::vector<int> lens{0};
  int n = 0;
  for (const auto& e : s.events) {
    n += delta(e);
    lens.push_back(n);
  }
  return lens;
}

// Strand edges per row, for insertion moves that need the edge at a position.
struct RowEdges {
  Trace t;
  explicit RowEdges(const SlicedDiagram& s) : t(trace_strands(s)) {}
  std::string edge(std::size_t gap, int pos1) const {
    return t.instances[t.rows[gap][pos1 - 1]].edge;
  }
  int width(std::size_t gap) const { return (int)t.rows[gap].size(); }
};

SlicedDiagram with_events(const SlicedDiagram& s, std::vector<Event> ev) {
  SlicedDiagram out = s;
  out.events = std::move(ev);
  return out;
}

std::optional<SlicedDiagram> checked(SlicedDiagram d, const OrientedGraph& want) {
  if (!validate_sliced(d).ok) return std::nullopt;
  if (!graphs_equal_labeled(underlying_graph(d), want)) return std::nullopt;
  return d;
}

}  // namespace

std::string move_kind_name(MoveInstance::Kind k) {
  switch (k) {
    case K::Exchange: return "exchange";
    case K::MinMaxCancel: return "min-max-cancel";
    case K::MinMaxAdd: return "min-max-add";
    case K::R1Remove: return "R1-remove";
    case K::R1Add: return "R1-add";
    case K::R2Remove: return "R2-remove";
    case K::R2Add: return "R2-add";
    case K::R3: return "R3";
    case K::R4Slide: return "R4-slide";
    case K::R5Twist: return "R5-twist";
  }
  return "?";
}

std::optional<SlicedDiagram> apply_move(const SlicedDiagram& s, const MoveInstance& m) {
  const auto& ev = s.events;
  const OrientedGraph& want = s.graph;
  int n = (int)ev.size();
  auto in_range = [&](int i, int count) { return i >= 0 && i + count <= n; };

  switch (m.kind) {
    case K::Exchange: {
      if (!in_range(m.at, 2)) return std::nullopt;
      Event a = ev[m.at], b = ev[m.at + 1];
      auto width = [&](const Event& e) { return std::max({consumed(e), inserted(e), 1}); };
      std::vector<Event> out(ev.begin(), ev.end());
      if (m.form == 0) {  // b acts strictly left of a
        if (!(b.pos + width(b) - 1 < a.pos)) return std::nullopt;
        Event a2 = a;
        a2.pos += delta(b);
        if (a2.pos < 1) return std::nullopt;
        out[m.at] = b;
        out[m.at + 1] = a2;
      } else {  // b acts strictly right of a
        if (!(b.pos > a.pos + inserted(a) - 1)) return std::nullopt;
        Event b2 = b;
        b2.pos -= delta(a);
        if (b2.pos < 1 || !(b2.pos > a.pos + consumed(a) - 1)) return std::nullopt;
        out[m.at] = b2;
        out[m.at + 1] = a;
      }
      return checked(with_events(s, std::move(out)), want);
    }

    case K::MinMaxCancel: {
      if (!in_range(m.at, 2)) return std::nullopt;
      const Event &a = ev[m.at], &b = ev[m.at + 1];
      if (a.kind != Event::Kind::Max || b.kind != Event::Kind::Min) return std::nullopt;
      bool right_form = a.down_side == Side::Right && b.pos == a.pos - 1;
      bool left_form = a.down_side == Side::Left && b.pos == a.pos + 1;
      if (!(right_form || left_form) || a.edge != b.edge) return std::nullopt;
      std::vector<Event> out(ev.begin(), ev.end());
      out.erase(out.begin() + m.at, out.begin() + m.at + 2);
      return checked(with_events(s, std::move(out)), want);
    }

    case K::MinMaxAdd: {
      // form 0: zigzag bending right of the strand at pos; form 1: left.
      if (m.at < 0 || m.at > n) return std::nullopt;
      RowEdges re(s);
      if (m.pos < 1 || m.pos > re.width(m.at)) return std::nullopt;
      std::string e = re.edge(m.at, m.pos);
      std::vector<Event> ins;
      if (m.form == 0)
        ins = {Event::max(m.pos + 1, e, Side::Right), Event::min(m.pos, e)};
      else
        ins = {Event::max(m.pos, e, Side::Left), Event::min(m.pos + 1, e)};
      std::vector<Event> out(ev.begin(), ev.end());
      out.insert(out.begin() + m.at, ins.begin(), ins.end());
      return checked(with_events(s, std::move(out)), want);
    }

    case K::R1Remove: {
      // form 0: a full kink (max, cross, min); form 1: untwist a crossing
      // capped by the min right below it; form 2: the mirror at a max.
      if (m.form == 0) {
        if (!in_range(m.at, 3)) return std::nullopt;
        const Event &a = ev[m.at], &x = ev[m.at + 1], &b = ev[m.at + 2];
        if (a.kind != Event::Kind::Max || x.kind != Event::Kind::Cross ||
            b.kind != Event::Kind::Min || a.edge != b.edge)
          return std::nullopt;
        bool form_a = a.down_side == Side::Right && x.pos == a.pos - 1 && b.pos == a.pos - 1;
        bool form_b = a.down_side == Side::Left && x.pos == a.pos + 1 && b.pos == a.pos + 1;
        if (!(form_a || form_b)) return std::nullopt;
        std::vector<Event> out(ev.begin(), ev.end());
        out.erase(out.begin() + m.at, out.begin() + m.at + 3);
        return checked(with_events(s, std::move(out)), want);
      }
      if (m.form == 1) {
        if (!in_range(m.at, 2)) return std::nullopt;
        const Event &x = ev[m.at], &b = ev[m.at + 1];
        if (x.kind != Event::Kind::Cross || b.kind != Event::Kind::Min || x.pos != b.pos)
          return std::nullopt;
        std::vector<Event> out(ev.begin(), ev.end());
        out.erase(out.begin() + m.at);
        return checked(with_events(s, std::move(out)), want);
      }
      if (m.form == 2) {
        if (!in_range(m.at, 2)) return std::nullopt;
        const Event &a = ev[m.at], &x = ev[m.at + 1];
        if (a.kind != Event::Kind::Max || x.kind != Event::Kind::Cross || x.pos != a.pos)
          return std::nullopt;
        Event a2 = a;
        a2.down_side = a.down_side == Side::Left ? Side::Right : Side::Left;
        std::vector<Event> out(ev.begin(), ev.end());
        out[m.at] = a2;
        out.erase(out.begin() + m.at + 1);
        return checked(with_events(s, std::move(out)), want);
      }
      return std::nullopt;
    }

    case K::R1Add: {
      // forms 0-3: insert a full kink at gap m.at, position m.pos (bit 0:
      // side, bit 1: over flag); forms 4/5: twist a min at event m.at;
      // forms 6/7: twist a max.
      if (m.form < 4) {
        if (m.at < 0 || m.at > n) return std::nullopt;
        RowEdges re(s);
        if (m.pos < 1 || m.pos > re.width(m.at)) return std::nullopt;
        std::string e = re.edge(m.at, m.pos);
        Side over = (m.form & 2) ? Side::Right : Side::Left;
        std::vector<Event> ins;
        if ((m.form & 1) == 0)
          ins = {Event::max(m.pos + 1, e, Side::Right), Event::cross(m.pos, over),
                 Event::min(m.pos, e)};
        else
          ins = {Event::max(m.pos, e, Side::Left), Event::cross(m.pos + 1, over),
                 Event::min(m.pos + 1, e)};
        std::vector<Event> out(ev.begin(), ev.end());
        out.insert(out.begin() + m.at, ins.begin(), ins.end());
        return checked(with_events(s, std::move(out)), want);
      }
      if (m.at < 0 || m.at >= n) return std::nullopt;
      Side over = (m.form & 1) ? Side::Right : Side::Left;
      std::vector<Event> out(ev.begin(), ev.end());
      if (m.form < 6) {
        if (ev[m.at].kind != Event::Kind::Min) return std::nullopt;
        out.insert(out.begin() + m.at, Event::cross(ev[m.at].pos, over));
      } else {
        if (ev[m.at].kind != Event::Kind::Max) return std::nullopt;
        Event a2 = ev[m.at];
        a2.down_side = a2.down_side == Side::Left ? Side::Right : Side::Left;
        out[m.at] = a2;
        out.insert(out.begin() + m.at + 1, Event::cross(a2.pos, over));
      }
      return checked(with_events(s, std::move(out)), want);
    }

    case K::R2Remove: {
      if (!in_range(m.at, 2)) return std::nullopt;
      const Event &a = ev[m.at], &b = ev[m.at + 1];
      if (a.kind != Event::Kind::Cross || b.kind != Event::Kind::Cross) return std::nullopt;
      if (a.pos != b.pos || a.over == b.over) return std::nullopt;
      std::vector<Event> out(ev.begin(), ev.end());
      out.erase(out.begin() + m.at, out.begin() + m.at + 2);
      return checked(with_events(s, std::move(out)), want);
    }

    case K::R2Add: {
      if (m.at < 0 || m.at > n) return std::nullopt;
      Side first = m.form == 0 ? Side::Left : Side::Right;
      Side second = m.form == 0 ? Side::Right : Side::Left;
      std::vector<Event> out(ev.begin(), ev.end());
      out.insert(out.begin() + m.at, {Event::cross(m.pos, first), Event::cross(m.pos, second)});
      return checked(with_events(s, std::move(out)), want);
    }

    case K::R3: {
      if (!in_range(m.at, 3)) return std::nullopt;
      Event a = ev[m.at], b = ev[m.at + 1], c = ev[m.at + 2];
      if (a.kind != Event::Kind::Cross || b.kind != Event::Kind::Cross ||
          c.kind != Event::Kind::Cross)
        return std::nullopt;
      int p;
      bool first_pattern;
      if (b.pos == a.pos + 1 && c.pos == a.pos) {
        p = a.pos;
        first_pattern = true;  // (p, p+1, p)
      } else if (b.pos == a.pos - 1 && c.pos == a.pos) {
        p = b.pos;
        first_pattern = false;  // (p+1, p, p+1)
      } else {
        return std::nullopt;
      }
      // With strands X, Y, Z at positions p, p+1, p+2 the first pattern
      // crosses X/Y, X/Z, Y/Z; the move is an isotopy iff the over relation
      // on the three strands is transitive.
      bool xy, xz, yz;  // true iff the earlier-position strand is over
      if (first_pattern) {
        xy = a.over == Side::Left;
        xz = b.over == Side::Left;
        yz = c.over == Side::Left;
      } else {
        yz = a.over == Side::Left;
        xz = b.over == Side::Left;
        xy = c.over == Side::Left;
      }
      bool cyclic = (xy && yz && !xz) || (!xy && !yz && xz);
      if (cyclic) return std::nullopt;
      std::vector<Event> out(ev.begin(), ev.end());
      out[m.at] = Event::cross(first_pattern ? p + 1 : p, c.over);
      out[m.at + 1] = Event::cross(first_pattern ? p : p + 1, b.over);
      out[m.at + 2] = Event::cross(first_pattern ? p + 1 : p, a.over);
      return checked(with_events(s, std::move(out)), want);
    }

    case K::R4Slide: {
      // form 0/2: crossings-then-vertex becomes vertex-then-crossings with
      // the moving strand on the left (0) or right (2); forms 1/3 invert.
      if (m.form == 0 || m.form == 2) {
        int i = m.at;
        if (i < 0 || i >= n) return std::nullopt;
        int j = i;
        Side flag{};
        bool have_flag = false;
        while (j < n && ev[j].kind == Event::Kind::Cross) {
          if (!have_flag) {
            flag = ev[j].over;
            have_flag = true;
          } else if (ev[j].over != flag) {
            return std::nullopt;
          }
          ++j;
        }
        if (!have_flag || j >= n || ev[j].kind != Event::Kind::Vertex) return std::nullopt;
        const Event& vx = ev[j];
        int k = (int)vx.ins.size(), q = (int)vx.outs.size();
        if (j - i != k || k < 1) return std::nullopt;
        std::vector<Event> out(ev.begin(), ev.begin() + i);
        if (m.form == 0) {
          for (int t = 0; t < k; ++t)
            if (ev[i + t].pos != vx.pos + t) return std::nullopt;
          Event v2 = vx;
          v2.pos = vx.pos + 1;
          out.push_back(v2);
          for (int t = 0; t < q; ++t) out.push_back(Event::cross(vx.pos + t, flag));
        } else {
          for (int t = 0; t < k; ++t)
            if (ev[i + t].pos != vx.pos + k - 1 - t) return std::nullopt;
          Event v2 = vx;
          v2.pos = vx.pos - 1;
          if (v2.pos < 1) return std::nullopt;
          out.push_back(v2);
          for (int t = 0; t < q; ++t) out.push_back(Event::cross(v2.pos + q - 1 - t, flag));
        }
        out.insert(out.end(), ev.begin() + j + 1, ev.end());
        return checked(with_events(s, std::move(out)), want);
      } else {
        int i = m.at;
        if (i < 0 || i >= n || ev[i].kind != Event::Kind::Vertex) return std::nullopt;
        const Event& vx = ev[i];
        int k = (int)vx.ins.size(), q = (int)vx.outs.size();
        int j = i + 1;
        Side flag{};
        bool have_flag = false;
        while (j < n && ev[j].kind == Event::Kind::Cross && j - i - 1 < q) {
          if (!have_flag) {
            flag = ev[j].over;
            have_flag = true;
          } else if (ev[j].over != flag) {
            return std::nullopt;
          }
          ++j;
        }
        if (j - i - 1 != q || q < 1) return std::nullopt;
        std::vector<Event> out(ev.begin(), ev.begin() + i);
        if (m.form == 1) {
          for (int t = 0; t < q; ++t)
            if (ev[i + 1 + t].pos != vx.pos - 1 + t) return std::nullopt;
          if (vx.pos - 1 < 1) return std::nullopt;
          for (int t = 0; t < k; ++t) out.push_back(Event::cross(vx.pos - 1 + t, flag));
          Event v2 = vx;
          v2.pos = vx.pos - 1;
          out.push_back(v2);
        } else {
          for (int t = 0; t < q; ++t)
            if (ev[i + 1 + t].pos != vx.pos + q - 1 - t) return std::nullopt;
          for (int t = 0; t < k; ++t) out.push_back(Event::cross(vx.pos + k - 1 - t, flag));
          Event v2 = vx;
          v2.pos = vx.pos + 1;
          out.push_back(v2);
        }
        out.insert(out.end(), ev.begin() + j, ev.end());
        return checked(with_events(s, std::move(out)), want);
      }
    }

    case K::R5Twist: {
      // form 0/2: absorb a crossing of adjacent in- (0) or out- (2) strands
      // into the vertex; forms 1/3 emit one, with m.pos choosing the slot.
      if (m.form == 0 || m.form == 2) {
        if (!in_range(m.at, 2)) return std::nullopt;
        bool above = m.form == 0;
        const Event& x = above ? ev[m.at] : ev[m.at + 1];
        const Event& vx = above ? ev[m.at + 1] : ev[m.at];
        if (x.kind != Event::Kind::Cross || vx.kind != Event::Kind::Vertex) return std::nullopt;
        int count = above ? (int)vx.ins.size() : (int)vx.outs.size();
        int j = x.pos - vx.pos + 1;
        if (j < 1 || j + 1 > count) return std::nullopt;
        Event v2 = vx;
        auto& lst = above ? v2.ins : v2.outs;
        std::swap(lst[j - 1], lst[j]);
        std::vector<Event> out(ev.begin(), ev.end());
        out.erase(out.begin() + m.at, out.begin() + m.at + 2);
        out.insert(out.begin() + m.at, v2);
        return checked(with_events(s, std::move(out)), want);
      } else {
        if (m.at < 0 || m.at >= n || ev[m.at].kind != Event::Kind::Vertex) return std::nullopt;
        bool above = m.form == 1;
        const Event& vx = ev[m.at];
        int count = above ? (int)vx.ins.size() : (int)vx.outs.size();
        int j = m.pos;
        if (j < 1 || j + 1 > count) return std::nullopt;
        Event v2 = vx;
        auto& lst = above ? v2.ins : v2.outs;
        std::swap(lst[j - 1], lst[j]);
        Event x = Event::cross(vx.pos + j - 1, Side::Left);
        std::vector<Event> out(ev.begin(), ev.end());
        out[m.at] = v2;
        out.insert(out.begin() + (above ? m.at : m.at + 1), x);
        return checked(with_events(s, std::move(out)), want);
      }
    }
  }
  return std::nullopt;
}

std::vector<MoveInstance> enumerate_moves(const SlicedDiagram& s) {
  require_valid(s);
  std::vector<MoveInstance> out;
  auto try_add = [&](MoveInstance m) {
    if (apply_move(s, m)) out.push_back(m);
  };
  int n = (int)s.events.size();
  auto lens = row_lengths(s);

  for (int i = 0; i < n; ++i) {
    try_add({K::MinMaxCancel, i});
    for (int f = 0; f < 3; ++f) try_add({K::R1Remove, i, 1, f});
    for (int f = 4; f < 8; ++f) try_add({K::R1Add, i, 1, f});
    try_add({K::R2Remove, i});
    try_add({K::R3, i});
    for (int f = 0; f < 4; ++f) try_add({K::R4Slide, i, 1, f});
    try_add({K::R5Twist, i, 1, 0});
    try_add({K::R5Twist, i, 1, 2});
    if (s.events[i].kind == Event::Kind::Vertex) {
      int k = (int)s.events[i].ins.size(), q = (int)s.events[i].outs.size();
      for (int j = 1; j + 1 <= k; ++j) try_add({K::R5Twist, i, j, 1});
      for (int j = 1; j + 1 <= q; ++j) try_add({K::R5Twist, i, j, 3});
    }
    for (int f = 0; f < 2; ++f) try_add({K::Exchange, i, 1, f});
  }
  for (int g = 0; g <= n; ++g) {
    int width = lens[g];
    for (int p = 1; p <= width; ++p) {
      try_add({K::MinMaxAdd, g, p, 0});
      try_add({K::MinMaxAdd, g, p, 1});
      for (int f = 0; f < 4; ++f) try_add({K::R1Add, g, p, f});
    }
    for (int p = 1; p + 1 <= width; ++p) {
      try_add({K::R2Add, g, p, 0});
      try_add({K::R2Add, g, p, 1});
    }
  }
  return out;
}

}  // namespace sg
