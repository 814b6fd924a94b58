#include "sg/layout.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sg {

namespace {

Rat fresh_between(std::set<Rat>& used, std::optional<Rat> lo, std::optional<Rat> hi) {
  Rat c;
  if (!lo && !hi) {
    c = used.empty() ? Rat(0) : *used.rbegin() + Rat(1);
  } else if (!lo) {
    auto it = used.lower_bound(*hi);
    c = it == used.begin() ? *hi - Rat(1) : Rat::midpoint(*std::prev(it), *hi);
  } else if (!hi) {
    auto it = used.upper_bound(*lo);
    c = it == used.end() ? *lo + Rat(1) : Rat::midpoint(*lo, *it);
  } else {
    // use the first used value inside (lo, hi) as the right bound, so the
    // midpoint is guaranteed unused
    auto it = used.upper_bound(*lo);
    if (it != used.end() && *it < *hi)
      c = Rat::midpoint(*lo, *it);
    else
      c = Rat::midpoint(*lo, *hi);
  }
  if (used.count(c)) throw std::logic_error("fresh_between produced a used value");
  used.insert(c);
  return c;
}

}  // namespace

Rat RectLayout::fresh_col_between(std::optional<Rat> lo, std::optional<Rat> hi) {
  return fresh_between(used_cols, lo, hi);
}
Rat RectLayout::fresh_row_between(std::optional<Rat> lo, std::optional<Rat> hi) {
  return fresh_between(used_rows, lo, hi);
}

// ---------------------------------------------------------------------------
// Stage 1: rectilinear realization.  Every live strand draws a vertical on a
// column of its own; the over strand of a crossing jogs horizontally across
// the under strand's column onto a fresh column.

namespace {

struct Live {
  std::string edge;
  bool up = false;
  Rat col;
  Rat start_y;  // row where the current vertical stretch began
};

struct Builder {
  RectLayout l;
  std::vector<Live> row;
  Rat cursor = Rat(0);

  Rat next_row() {
    cursor = cursor - Rat(1);
    l.used_rows.insert(cursor);
    return cursor;
  }
  std::optional<Rat> col_left_of(int pos0) const {
    if (pos0 - 1 < 0) return std::nullopt;
    return row[pos0 - 1].col;
  }
  std::optional<Rat> col_right_of(int pos0) const {
    if (pos0 >= (int)row.size()) return std::nullopt;
    return row[pos0].col;
  }

  void emit_vertical(int i, Rat y_end) {
    Live& p = row[i];
    Seg s;
    s.edge = p.edge;
    if (!p.up) {
      s.a = {p.col, p.start_y};
      s.b = {p.col, y_end};
    } else {
      s.a = {p.col, y_end};
      s.b = {p.col, p.start_y};
    }
    l.segs.push_back(s);
    int idx = (int)l.segs.size() - 1;
    for (auto& c : l.crossings)
      if (c.v_seg == -1 && c.p.x == p.col && y_end < c.p.y && c.p.y < p.start_y) c.v_seg = idx;
  }
};

}  // namespace

RectLayout rectilinear_layout(const SlicedDiagram& sd) {
  require_valid(sd);
  Builder b;
  for (const Event& e : sd.events) {
    int pos0 = e.pos - 1;
    switch (e.kind) {
      case Event::Kind::Max: {
        Rat y = b.next_row();
        auto lo = b.col_left_of(pos0);
        auto hi = b.col_right_of(pos0);
        Rat c1 = b.l.fresh_col_between(lo, hi);
        Rat c2 = b.l.fresh_col_between(c1, hi);
        bool left_down = e.down_side == Event::Side::Left;
        Seg cap;
        cap.edge = e.edge;
        if (left_down) {  // travel rises on the right arm and crosses leftward
          cap.a = {c2, y};
          cap.b = {c1, y};
        } else {
          cap.a = {c1, y};
          cap.b = {c2, y};
        }
        b.l.segs.push_back(cap);
        b.row.insert(b.row.begin() + pos0,
                     {Live{e.edge, !left_down, c1, y}, Live{e.edge, left_down, c2, y}});
        break;
      }
      case Event::Kind::Min: {
        Rat y = b.next_row();
        Rat cl = b.row[pos0].col, cr = b.row[pos0 + 1].col;
        bool left_down = !b.row[pos0].up;
        b.emit_vertical(pos0, y);
        b.emit_vertical(pos0 + 1, y);
        Seg cup;
        cup.edge = e.edge;
        if (left_down) {
          cup.a = {cl, y};
          cup.b = {cr, y};
        } else {
          cup.a = {cr, y};
          cup.b = {cl, y};
        }
        b.l.segs.push_back(cup);
        b.row.erase(b.row.begin() + pos0, b.row.begin() + pos0 + 2);
        break;
      }
      case Event::Kind::Cross: {
        Rat y = b.next_row();
        bool left_over = e.over == Event::Side::Left;
        int jog_i = left_over ? pos0 : pos0 + 1;
        int stay_i = left_over ? pos0 + 1 : pos0;
        Rat target = left_over
                         ? b.l.fresh_col_between(b.row[pos0 + 1].col, b.col_right_of(pos0 + 2))
                         : b.l.fresh_col_between(b.col_left_of(pos0), b.row[pos0].col);
        b.emit_vertical(jog_i, y);
        Live& jog = b.row[jog_i];
        Seg h;
        h.edge = jog.edge;
        if (!jog.up) {
          h.a = {jog.col, y};
          h.b = {target, y};
        } else {
          h.a = {target, y};
          h.b = {jog.col, y};
        }
        b.l.segs.push_back(h);
        LayoutCrossing rec;
        rec.p = {b.row[stay_i].col, y};
        rec.h_seg = (int)b.l.segs.size() - 1;
        rec.v_seg = -1;  // patched when the under strand's stretch is emitted
        rec.horizontal_over = true;
        b.l.crossings.push_back(rec);
        jog.col = target;
        jog.start_y = y;
        std::swap(b.row[pos0], b.row[pos0 + 1]);
        break;
      }
      case Event::Kind::Vertex: {
        // The vertex's disk is kept arbitrarily small: the in-strands funnel
        // onto a tight cluster of fresh columns via horizontal jogs, the fan
        // chords live inside that cluster only, and the out-strands jog back
        // out of it.  Fresh-column allocation always bisects toward the
        // nearest used column, so no later column ever lands inside the
        // cluster and the wrapping stage can never meet a fan chord.
        int k = (int)e.ins.size();
        int q = (int)e.outs.size();
        auto hi = b.col_right_of(pos0 + k);
        std::optional<Rat> anchor =
            k > 0 ? std::optional<Rat>{b.row[pos0 + k - 1].col} : b.col_left_of(pos0);

        std::vector<Rat> tiny(k);
        {
          std::optional<Rat> lb = anchor;
          for (int j = 0; j < k; ++j) {
            tiny[j] = b.l.fresh_col_between(lb, hi);
            lb = tiny[j];
          }
        }
        // In-funnel, rightmost strand first so each jog only spans columns
        // already abandoned above it.
        for (int j = k - 1; j >= 0; --j) {
          Live& p = b.row[pos0 + j];
          if (p.col == tiny[j]) continue;
          Rat y = b.next_row();
          b.emit_vertical(pos0 + j, y);
          Seg jog;
          jog.edge = p.edge;
          jog.a = {p.col, y};
          jog.b = {tiny[j], y};
          b.l.segs.push_back(jog);
          p.col = tiny[j];
          p.start_y = y;
        }
        Rat y_ft = b.next_row();
        Rat y_v = b.next_row();
        Rat y_fb = b.next_row();
        Fan fan;
        fan.vertex = e.vertex;
        for (int j = 0; j < k; ++j) {
          b.emit_vertical(pos0 + j, y_ft);
          fan.ins.push_back({{tiny[j], y_ft}, e.ins[j]});
        }
        Rat xv = b.l.fresh_col_between(k > 0 ? std::optional<Rat>{tiny[k - 1]} : anchor, hi);
        fan.p = {xv, y_v};
        b.row.erase(b.row.begin() + pos0, b.row.begin() + pos0 + k);

        std::vector<Rat> scol(q);
        {
          std::optional<Rat> lb = xv;
          for (int j = 0; j < q; ++j) {
            scol[j] = b.l.fresh_col_between(lb, hi);
            lb = scol[j];
          }
        }
        std::vector<Live> outs;
        for (int j = 0; j < q; ++j) {
          fan.outs.push_back({{scol[j], y_fb}, e.outs[j]});
          outs.push_back({e.outs[j], false, scol[j], y_fb});
        }
        b.l.fans.push_back(fan);
        b.row.insert(b.row.begin() + pos0, outs.begin(), outs.end());
        // Out-funnel: move the newborn strands out of the cluster, rightmost
        // first, so the cluster stays dead forever.
        if (q > 0) {
          std::vector<Rat> fcol(q);
          std::optional<Rat> ub = hi;
          for (int j = q - 1; j >= 0; --j) {
            fcol[j] = b.l.fresh_col_between(scol[q - 1], ub);
            ub = fcol[j];
          }
          for (int j = q - 1; j >= 0; --j) {
            Live& p = b.row[pos0 + j];
            Rat y = b.next_row();
            b.emit_vertical(pos0 + j, y);
            Seg jog;
            jog.edge = p.edge;
            jog.a = {p.col, y};
            jog.b = {fcol[j], y};
            b.l.segs.push_back(jog);
            p.col = fcol[j];
            p.start_y = y;
          }
        }
        break;
      }
    }
  }
  if (!b.row.empty()) throw std::logic_error("layout: row not empty at end");
  for (const auto& c : b.l.crossings)
    if (c.v_seg < 0) throw std::logic_error("layout: crossing left unpatched");
  return std::move(b.l);
}

// ---------------------------------------------------------------------------
// Stage 2: crossing normalization.  A vertical-over crossing's vertical
// strand is walked around the right end of the horizontal it crossed; the
// rerouted strand slides over everything it passes, so the new crossings are
// horizontal-over.

RectLayout normalize_crossings(RectLayout l) {
  for (std::size_t ci = 0; ci < l.crossings.size(); ++ci) {
    if (l.crossings[ci].horizontal_over) continue;
    LayoutCrossing bad = l.crossings[ci];
    const Seg h = l.segs[bad.h_seg];
    const Seg v = l.segs[bad.v_seg];
    Rat y_h = h.a.y;
    Rat x_v = v.a.x;
    Rat x_end = std::max(h.a.x, h.b.x);

    auto above = l.used_rows.upper_bound(y_h);
    Rat y_up = l.fresh_row_between(
        y_h, above == l.used_rows.end() ? std::optional<Rat>{} : std::optional<Rat>{*above});
    auto below = l.used_rows.lower_bound(y_h);
    Rat y_dn = l.fresh_row_between(below == l.used_rows.begin()
                                       ? std::optional<Rat>{}
                                       : std::optional<Rat>{*std::prev(below)},
                                   y_h);
    auto right_of_end = l.used_cols.upper_bound(x_end);
    Rat x_e = l.fresh_col_between(x_end, right_of_end == l.used_cols.end()
                                             ? std::optional<Rat>{}
                                             : std::optional<Rat>{*right_of_end});

    bool up = v.travels_up();
    Seg first_piece = v, second_piece = v;
    if (up) {
      first_piece.b.y = y_dn;   // lower remainder, travel up into the detour
      second_piece.a.y = y_up;  // upper remainder
    } else {
      first_piece.b.y = y_up;   // upper remainder, travel down into the detour
      second_piece.a.y = y_dn;
    }
    Seg A, B, C;
    A.edge = B.edge = C.edge = v.edge;
    if (!up) {
      A.a = {x_v, y_up};
      A.b = {x_e, y_up};
      B.a = {x_e, y_up};
      B.b = {x_e, y_dn};
      C.a = {x_e, y_dn};
      C.b = {x_v, y_dn};
    } else {
      C.a = {x_v, y_dn};
      C.b = {x_e, y_dn};
      B.a = {x_e, y_dn};
      B.b = {x_e, y_up};
      A.a = {x_e, y_up};
      A.b = {x_v, y_up};
    }

    l.segs[bad.v_seg] = first_piece;
    int second_idx = (int)l.segs.size();
    l.segs.push_back(second_piece);
    int a_idx = (int)l.segs.size();
    l.segs.push_back(A);
    l.segs.push_back(B);
    l.segs.push_back(C);
    int c_idx = a_idx + 2;

    auto on_piece = [&](const Seg& s, const Vec2& p) {
      Rat lo = std::min(s.a.y, s.b.y), hi = std::max(s.a.y, s.b.y);
      return p.x == s.a.x && lo < p.y && p.y < hi;
    };
    for (auto& c : l.crossings) {
      if (c.v_seg != bad.v_seg) continue;
      if (on_piece(l.segs[second_idx], c.p)) c.v_seg = second_idx;
    }
    l.crossings.erase(l.crossings.begin() + ci);
    --ci;

    Rat x_lo = std::min(x_v, x_e), x_hi = std::max(x_v, x_e);
    for (int si = 0; si < (int)l.segs.size(); ++si) {
      const Seg& w = l.segs[si];
      if (!w.vertical()) continue;
      Rat wx = w.a.x;
      if (!(x_lo < wx && wx < x_hi)) continue;
      Rat wlo = std::min(w.a.y, w.b.y), whi = std::max(w.a.y, w.b.y);
      for (const Rat& yy : {y_up, y_dn}) {
        if (wlo < yy && yy < whi) {
          LayoutCrossing c2;
          c2.p = {wx, yy};
          c2.h_seg = yy == y_up ? a_idx : c_idx;
          c2.v_seg = si;
          c2.horizontal_over = true;
          l.crossings.push_back(c2);
        }
      }
    }
  }
  return l;
}

// ---------------------------------------------------------------------------
// Stage 3: up-column isolation.

std::vector<int> up_segments(const RectLayout& l) {
  std::vector<int> ups;
  for (int i = 0; i < (int)l.segs.size(); ++i)
    if (!l.segs[i].wrap && l.segs[i].travels_up()) ups.push_back(i);
  std::sort(ups.begin(), ups.end(), [&](int a, int b) { return l.segs[a].a.x < l.segs[b].a.x; });
  return ups;
}

RectLayout isolate_up_columns(RectLayout l) {
  for (int ui : up_segments(l)) {
    Rat x = l.segs[ui].a.x;
    bool shared = false;
    for (int i = 0; i < (int)l.segs.size(); ++i)
      if (i != ui && l.segs[i].vertical() && l.segs[i].a.x == x) shared = true;
    for (const auto& f : l.fans) {
      auto touches = [&](const Vec2& a, const Vec2& b) {
        return std::min(a.x, b.x) <= x && x <= std::max(a.x, b.x);
      };
      for (const auto& sl : f.ins)
        if (touches(sl.attach, f.p)) shared = true;
      for (const auto& sl : f.outs)
        if (touches(sl.attach, f.p)) shared = true;
    }
    if (!shared) continue;

    auto right = l.used_cols.upper_bound(x);
    Rat nx = l.fresh_col_between(x, right == l.used_cols.end() ? std::optional<Rat>{}
                                                               : std::optional<Rat>{*right});
    Vec2 old_lo = l.segs[ui].a, old_hi = l.segs[ui].b;
    for (auto& t : l.segs) {
      if (!t.horizontal()) continue;
      if (t.a == old_lo || t.a == old_hi) t.a.x = nx;
      if (t.b == old_lo || t.b == old_hi) t.b.x = nx;
    }
    for (auto& c : l.crossings)
      if (c.v_seg == ui) c.p.x = nx;
    l.segs[ui].a.x = nx;
    l.segs[ui].b.x = nx;
  }
  return l;
}

// ---------------------------------------------------------------------------
// Stage 4: wrapping.  Each upward run s_i is replaced by the remaining three
// sides of a nested upright rectangle whose left side lies on s_i's column;
// the new verticals pass under every horizontal they meet.

RectLayout wrap_up_segments(RectLayout l) {
  auto ups = up_segments(l);
  int n = (int)ups.size();
  Rat ymin = l.used_rows.empty() ? Rat(0) : *l.used_rows.begin();
  Rat ymax = l.used_rows.empty() ? Rat(0) : *l.used_rows.rbegin();
  Rat xmax = l.used_cols.empty() ? Rat(0) : *l.used_cols.rbegin();

  for (int i = 1; i <= n; ++i) {
    int ui = ups[i - 1];
    Seg s = l.segs[ui];
    Rat off = Rat(n + 1 - i);
    Rat ybot = ymin - off, ytop = ymax + off, xr = xmax + off;
    l.used_rows.insert(ybot);
    l.used_rows.insert(ytop);
    l.used_cols.insert(xr);
    Rat x = s.a.x, y_a = s.a.y, y_b = s.b.y;  // travel-up: a is the lower end

    // The run slides out from underneath whatever crossed it.
    std::vector<LayoutCrossing> keep;
    for (const auto& c : l.crossings)
      if (c.v_seg != ui) keep.push_back(c);
    l.crossings = std::move(keep);

    auto piece = [&](Vec2 pa, Vec2 pb) {
      Seg p;
      p.a = pa;
      p.b = pb;
      p.edge = s.edge;
      p.wrap = true;
      return p;
    };
    int base = (int)l.segs.size();
    l.segs[ui] = piece({x, y_a}, {x, ybot});
    l.segs.push_back(piece({x, ybot}, {xr, ybot}));
    l.segs.push_back(piece({xr, ybot}, {xr, ytop}));
    l.segs.push_back(piece({xr, ytop}, {x, ytop}));
    l.segs.push_back(piece({x, ytop}, {x, y_b}));

    auto add_under = [&](int vi) {
      const Seg& v = l.segs[vi];
      Rat lo = std::min(v.a.y, v.b.y), hi = std::max(v.a.y, v.b.y);
      for (int hj = 0; hj < (int)l.segs.size(); ++hj) {
        const Seg& hseg = l.segs[hj];
        if (!hseg.horizontal()) continue;
        Rat xlo = std::min(hseg.a.x, hseg.b.x), xhi = std::max(hseg.a.x, hseg.b.x);
        if (!(xlo < x && x < xhi)) continue;
        if (!(lo < hseg.a.y && hseg.a.y < hi)) continue;
        LayoutCrossing c;
        c.p = {x, hseg.a.y};
        c.h_seg = hj;
        c.v_seg = vi;
        c.horizontal_over = true;
        l.crossings.push_back(c);
      }
    };
    add_under(ui);
    add_under(base + 3);
  }

  l.wrap_count = n;
  l.annular = true;
  Rat x0 = n == 0 ? l.fresh_col_between(xmax, std::nullopt)
                  : l.fresh_col_between(xmax, xmax + Rat(1));
  Rat y0;
  if (l.used_rows.empty()) {
    y0 = Rat(0);
  } else {
    Rat mid = Rat::midpoint(ymin, ymax);
    auto hi_it = l.used_rows.upper_bound(mid);
    if (hi_it == l.used_rows.end())
      y0 = l.fresh_row_between(*std::prev(hi_it), std::nullopt);
    else if (hi_it == l.used_rows.begin())
      y0 = l.fresh_row_between(std::nullopt, *hi_it);
    else
      y0 = l.fresh_row_between(*std::prev(hi_it), *hi_it);
  }
  l.origin = {x0, y0};
  return l;
}

// ---------------------------------------------------------------------------
// Structural validation and the monotonicity certificate.

void validate_layout(const RectLayout& l) {
  auto overlap1 = [](Rat a1, Rat a2, Rat b1, Rat b2) {
    Rat lo1 = std::min(a1, a2), hi1 = std::max(a1, a2);
    Rat lo2 = std::min(b1, b2), hi2 = std::max(b1, b2);
    return std::max(lo1, lo2) < std::min(hi1, hi2);
  };
  for (const auto& s : l.segs) {
    if (!s.vertical() && !s.horizontal())
      throw std::runtime_error("layout: non-axis-parallel segment");
    if (s.a == s.b) throw std::runtime_error("layout: degenerate segment");
  }
  for (int i = 0; i < (int)l.segs.size(); ++i) {
    for (int j = i + 1; j < (int)l.segs.size(); ++j) {
      const Seg &s = l.segs[i], &t = l.segs[j];
      if (s.vertical() && t.vertical()) {
        if (s.a.x == t.a.x && overlap1(s.a.y, s.b.y, t.a.y, t.b.y))
          throw std::runtime_error("layout: collinear vertical overlap");
        continue;
      }
      if (s.horizontal() && t.horizontal()) {
        if (s.a.y == t.a.y && overlap1(s.a.x, s.b.x, t.a.x, t.b.x))
          throw std::runtime_error("layout: collinear horizontal overlap");
        continue;
      }
      const Seg& h = s.horizontal() ? s : t;
      const Seg& v = s.horizontal() ? t : s;
      Rat xlo = std::min(h.a.x, h.b.x), xhi = std::max(h.a.x, h.b.x);
      Rat ylo = std::min(v.a.y, v.b.y), yhi = std::max(v.a.y, v.b.y);
      bool x_int = xlo < v.a.x && v.a.x < xhi;
      bool y_int = ylo < h.a.y && h.a.y < yhi;
      bool x_touch = xlo <= v.a.x && v.a.x <= xhi;
      bool y_touch = ylo <= h.a.y && h.a.y <= yhi;
      if (x_int && y_int) {
        bool found = false;
        for (const auto& c : l.crossings)
          if (c.p.x == v.a.x && c.p.y == h.a.y) found = true;
        if (!found) throw std::runtime_error("layout: unrecorded crossing");
      } else if (x_touch && y_touch) {
        Vec2 p{v.a.x, h.a.y};
        bool h_end = p == h.a || p == h.b;
        bool v_end = p == v.a || p == v.b;
        if (!(h_end && v_end)) throw std::runtime_error("layout: T-junction");
      }
    }
  }
  for (const auto& c : l.crossings) {
    if (c.h_seg < 0 || c.v_seg < 0 || c.h_seg >= (int)l.segs.size() ||
        c.v_seg >= (int)l.segs.size())
      throw std::runtime_error("layout: crossing references missing segment");
    if (!l.segs[c.h_seg].horizontal() || !l.segs[c.v_seg].vertical())
      throw std::runtime_error("layout: crossing with wrong segment kinds");
  }
  for (const auto& f : l.fans) {
    for (const auto& sl : f.ins)
      if (!(sl.attach.y > f.p.y)) throw std::runtime_error("layout: fan does not descend");
    for (const auto& sl : f.outs)
      if (!(sl.attach.y < f.p.y)) throw std::runtime_error("layout: fan does not descend");
  }
}

// The annular word is read with the horizontals tilted slightly downward and
// the axis far to the right; per segment the angular coordinate strictly
// increases along travel iff:
//   - non-wrap verticals descend and stay left of the origin column,
//   - non-wrap horizontals stay left of the origin column, off the seam row,
//   - wrap right sides ascend right of the origin column,
//   - wrap bottoms travel right below the seam row, wrap tops travel left
//     above it, and the wrap left pieces descend.
bool monotone_certificate(const RectLayout& l) {
  if (!l.annular) return false;
  const Rat& x0 = l.origin.x;
  const Rat& y0 = l.origin.y;
  for (const auto& s : l.segs) {
    if (s.vertical()) {
      if (s.a.x > x0) {
        if (!(s.wrap && s.travels_up())) return false;
      } else {
        if (s.travels_up()) return false;
        if (s.a.x == x0) return false;
      }
    } else {
      if (s.wrap && (s.a.y > y0) != (s.b.x < s.a.x)) return false;  // top left / bottom right
      if (!s.wrap && !(std::max(s.a.x, s.b.x) < x0 && s.a.y != y0)) return false;
      if (s.wrap && (std::min(s.a.x, s.b.x) >= x0 || s.a.y == y0)) return false;
    }
  }
  for (const auto& f : l.fans) {
    if (f.p.x >= x0) return false;
    for (const auto& sl : f.ins)
      if (!(sl.attach.y > f.p.y) || sl.attach.x >= x0) return false;
    for (const auto& sl : f.outs)
      if (!(sl.attach.y < f.p.y) || sl.attach.x >= x0) return false;
  }
  return true;
}

}  // namespace sg
