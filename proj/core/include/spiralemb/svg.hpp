#pragma once

#include <string>
#include <vector>

#include "spiralemb/geometry.hpp"

namespace spiralemb {

/// Minimal deterministic SVG 1.1 writer for point sets, polylines and circle
/// outlines. The viewBox is fitted to the drawn geometry.
class SvgFigure {
 public:
  void add_polyline(const std::vector<PlanarPoint>& points, const std::string& color,
                    double stroke_width = 0.004);
  void add_circle_outline(double radius, const std::string& color, double stroke_width = 0.006,
                          PlanarPoint center = {0.0, 0.0});
  void add_rect_outline(const RectRegion& rect, const std::string& color,
                        double stroke_width = 0.006);

  bool empty() const { return polylines_.empty() && circles_.empty() && rects_.empty(); }

  std::string render() const;
  void write(const std::string& path) const;

 private:
  struct Polyline {
    std::vector<PlanarPoint> points;
    std::string color;
    double stroke_width;
  };
  struct Circle {
    PlanarPoint center;
    double radius;
    std::string color;
    double stroke_width;
  };
  struct Rect {
    RectRegion rect;
    std::string color;
    double stroke_width;
  };

  std::vector<Polyline> polylines_;
  std::vector<Circle> circles_;
  std::vector<Rect> rects_;
};

}  // namespace spiralemb
