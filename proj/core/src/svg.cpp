#include "spiralemb/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace spiralemb {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void include(PlanarPoint p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
};

}  // namespace

void SvgFigure::add_polyline(const std::vector<PlanarPoint>& points, const std::string& color,
                             double stroke_width) {
  if (points.size() < 2) throw usage_error("add_polyline: need at least two points");
  polylines_.push_back({points, color, stroke_width});
}

void SvgFigure::add_circle_outline(double radius, const std::string& color, double stroke_width,
                                   PlanarPoint center) {
  if (!(radius > 0.0)) throw usage_error("add_circle_outline: radius must be positive");
  circles_.push_back({center, radius, color, stroke_width});
}

void SvgFigure::add_rect_outline(const RectRegion& rect, const std::string& color,
                                 double stroke_width) {
  if (rect.unbounded_height) throw usage_error("add_rect_outline: rect must be bounded");
  rects_.push_back({rect, color, stroke_width});
}

std::string SvgFigure::render() const {
  if (empty()) throw usage_error("render: figure is empty");
  Bounds b;
  for (const Polyline& pl : polylines_) {
    for (PlanarPoint p : pl.points) b.include(p);
  }
  for (const Circle& c : circles_) {
    b.include({c.center.x - c.radius, c.center.y - c.radius});
    b.include({c.center.x + c.radius, c.center.y + c.radius});
  }
  for (const Rect& r : rects_) {
    b.include(r.rect.anchor);
    b.include({r.rect.anchor.x + r.rect.width, r.rect.anchor.y + r.rect.height});
  }
  const double pad = 0.05 * std::max(b.max_x - b.min_x, b.max_y - b.min_y) + 1e-9;
  const double x0 = b.min_x - pad;
  const double y0 = b.min_y - pad;
  const double w = (b.max_x - b.min_x) + 2.0 * pad;
  const double h = (b.max_y - b.min_y) + 2.0 * pad;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  // Flip the y-axis so the mathematical orientation (y up) is preserved.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\""
     << num(x0) << ' ' << num(-y0 - h) << ' ' << num(w) << ' ' << num(h) << "\">\n";
  os << "<g transform=\"scale(1,-1)\">\n";
  for (const Rect& r : rects_) {
    os << "<rect x=\"" << num(r.rect.anchor.x) << "\" y=\"" << num(r.rect.anchor.y)
       << "\" width=\"" << num(r.rect.width) << "\" height=\"" << num(r.rect.height)
       << "\" fill=\"none\" stroke=\"" << r.color << "\" stroke-width=\""
       << num(r.stroke_width) << "\"/>\n";
  }
  for (const Circle& c : circles_) {
    os << "<circle cx=\"" << num(c.center.x) << "\" cy=\"" << num(c.center.y) << "\" r=\""
       << num(c.radius) << "\" fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\""
       << num(c.stroke_width) << "\"/>\n";
  }
  for (const Polyline& pl : polylines_) {
    os << "<polyline fill=\"none\" stroke=\"" << pl.color << "\" stroke-width=\""
       << num(pl.stroke_width) << "\" points=\"";
    for (std::size_t i = 0; i < pl.points.size(); ++i) {
      if (i) os << ' ';
      os << num(pl.points[i].x) << ',' << num(pl.points[i].y);
    }
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void SvgFigure::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("svg write: cannot open " + path);
  out << render();
  if (!out) throw std::runtime_error("svg write: write failed for " + path);
}

}  // namespace spiralemb
