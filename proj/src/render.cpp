#include "sg/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sg {

namespace {

constexpr double kScale = 40.0;
constexpr double kGap = 0.18;    // under-strand gap half-width, in grid units
constexpr double kArrow = 6.0;   // arrowhead size in pixels

struct Mapper {
  double minx = 0, maxy = 0;
  double X(const Rat& x) const { return (x.to_double() - minx) * kScale + 20.0; }
  double Y(const Rat& y) const { return Yd(y.to_double()); }
  double Yd(double y) const { return (maxy - y) * kScale + 20.0; }
};

void line(std::ostringstream& out, double x1, double y1, double x2, double y2,
          const char* cls) {
  out << "<line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
      << "\" y2=\"" << y2 << "\"/>\n";
}

void arrow(std::ostringstream& out, double x1, double y1, double x2, double y2) {
  double mx = x1 + 0.6 * (x2 - x1), my = y1 + 0.6 * (y2 - y1);
  double dx = x2 - x1, dy = y2 - y1;
  double len = std::hypot(dx, dy);
  if (len < 1e-9) return;
  dx /= len;
  dy /= len;
  double lx = -dy, ly = dx;
  out << "<path class=\"arrow\" d=\"M " << mx << " " << my << " L "
      << mx - kArrow * dx + 0.5 * kArrow * lx << " " << my - kArrow * dy + 0.5 * kArrow * ly
      << " L " << mx - kArrow * dx - 0.5 * kArrow * lx << " "
      << my - kArrow * dy - 0.5 * kArrow * ly << " Z\"/>\n";
}

}  // namespace

std::string render_svg(const RectLayout& l) {
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  bool first = true;
  auto see = [&](const Vec2& p) {
    double x = p.x.to_double(), y = p.y.to_double();
    if (first) {
      minx = maxx = x;
      miny = maxy = y;
      first = false;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  };
  for (const auto& s : l.segs) {
    see(s.a);
    see(s.b);
  }
  for (const auto& f : l.fans) see(f.p);

  Mapper m;
  m.minx = minx;
  m.maxy = maxy;
  double w = (maxx - minx) * kScale + 40.0, h = (maxy - miny) * kScale + 40.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "<style>.strand{stroke:#222;stroke-width:2;fill:none}"
         ".wrap{stroke:#1060c0;stroke-width:2;fill:none}"
         ".fan{stroke:#222;stroke-width:2;fill:none}"
         ".arrow{fill:#222;stroke:none}"
         ".vertex{fill:#c03030}"
         "text{font:10px sans-serif;fill:#555}</style>\n";

  for (const auto& s : l.segs) {
    const char* cls = s.wrap ? "wrap" : "strand";
    if (s.vertical()) {
      // split at each crossing where this vertical passes under
      std::vector<double> cuts;
      for (const auto& c : l.crossings) {
        bool under_here = c.horizontal_over && c.p.x == s.a.x;
        if (!under_here) continue;
        Rat lo = std::min(s.a.y, s.b.y), hi = std::max(s.a.y, s.b.y);
        if (lo < c.p.y && c.p.y < hi) cuts.push_back(c.p.y.to_double());
      }
      std::sort(cuts.begin(), cuts.end());
      double ylo = std::min(s.a.y.to_double(), s.b.y.to_double());
      double yhi = std::max(s.a.y.to_double(), s.b.y.to_double());
      double cur = ylo;
      for (double cy : cuts) {
        line(out, m.X(s.a.x), m.Yd(cur), m.X(s.a.x), m.Yd(cy - kGap), cls);
        cur = cy + kGap;
      }
      line(out, m.X(s.a.x), m.Yd(cur), m.X(s.a.x), m.Yd(yhi), cls);
    } else {
      line(out, m.X(s.a.x), m.Y(s.a.y), m.X(s.b.x), m.Y(s.b.y), cls);
    }
    arrow(out, m.X(s.a.x), m.Y(s.a.y), m.X(s.b.x), m.Y(s.b.y));
  }
  for (const auto& f : l.fans) {
    for (const auto& sl : f.ins) {
      line(out, m.X(sl.attach.x), m.Y(sl.attach.y), m.X(f.p.x), m.Y(f.p.y), "fan");
      arrow(out, m.X(sl.attach.x), m.Y(sl.attach.y), m.X(f.p.x), m.Y(f.p.y));
    }
    for (const auto& sl : f.outs) {
      line(out, m.X(f.p.x), m.Y(f.p.y), m.X(sl.attach.x), m.Y(sl.attach.y), "fan");
      arrow(out, m.X(f.p.x), m.Y(f.p.y), m.X(sl.attach.x), m.Y(sl.attach.y));
    }
    out << "<circle class=\"vertex\" cx=\"" << m.X(f.p.x) << "\" cy=\"" << m.Y(f.p.y)
        << "\" r=\"4\"/>\n";
    out << "<text x=\"" << m.X(f.p.x) + 6 << "\" y=\"" << m.Y(f.p.y) - 6 << "\">" << f.vertex
        << "</text>\n";
  }
  if (l.annular) {
    out << "<circle cx=\"" << m.X(l.origin.x) << "\" cy=\"" << m.Y(l.origin.y)
        << "\" r=\"3\" fill=\"#188038\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const SlicedDiagram& s, bool annular) {
  RectLayout l = rectilinear_layout(s);
  l = normalize_crossings(std::move(l));
  if (annular) {
    l = isolate_up_columns(std::move(l));
    l = wrap_up_segments(std::move(l));
  }
  return render_svg(l);
}

}  // namespace sg
