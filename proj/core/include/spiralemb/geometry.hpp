#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace spiralemb {

inline constexpr double kPi = 3.14159265358979323846;
inline const double kSqrtPi = std::sqrt(kPi);

/// Evaluation at a point outside a map's domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller misuse: bad argument combinations, empty inputs, bad ordering.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested parameters cannot satisfy the construction's constraints.
class construction_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
  double norm_sq() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
};

inline PlanarPoint operator+(PlanarPoint a, PlanarPoint b) { return {a.x + b.x, a.y + b.y}; }
inline PlanarPoint operator-(PlanarPoint a, PlanarPoint b) { return {a.x - b.x, a.y - b.y}; }

struct Point4 {
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;

  bool finite() const {
    return std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) && std::isfinite(y2);
  }
};

/// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  double det() const { return a * d - b * c; }
  PlanarPoint apply(PlanarPoint p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
};

inline Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

/// Open axis-aligned rectangle anchored at its lower-left corner.
/// Membership is strict; the unbounded_height flag turns the rectangle into a
/// vertical strip (only the x-interval is tested).
struct RectRegion {
  double width = 1.0;
  double height = 1.0;
  PlanarPoint anchor{0.0, 0.0};
  bool unbounded_height = false;

  bool contains(PlanarPoint p) const {
    if (p.x <= anchor.x || p.x >= anchor.x + width) return false;
    if (unbounded_height) return true;
    return p.y > anchor.y && p.y < anchor.y + height;
  }
  double area() const { return width * height; }

  static RectRegion from_size(double w, double h, PlanarPoint a = {0.0, 0.0}) {
    if (!(w > 0.0) || !(h > 0.0)) throw usage_error("RectRegion: width and height must be positive");
    return {w, h, a, false};
  }
  /// Vertical strip (-b/2, b/2) x R.
  static RectRegion vertical_strip(double b) {
    if (!(b > 0.0)) throw usage_error("RectRegion: strip width must be positive");
    return {b, 1.0, {-b / 2.0, 0.0}, true};
  }
};

struct BallRegion {
  double radius = 1.0;
  PlanarPoint center{0.0, 0.0};
  int dimension = 2;
  bool closed = false;

  static BallRegion open(double r, int dim = 2) {
    if (!(r > 0.0)) throw usage_error("BallRegion: radius must be positive");
    return {r, {0.0, 0.0}, dim, false};
  }
  static BallRegion closed_ball(double r, int dim = 2) {
    if (!(r >= 0.0)) throw usage_error("BallRegion: radius must be nonnegative");
    return {r, {0.0, 0.0}, dim, true};
  }

  bool contains(PlanarPoint p) const {
    const double d2 = (p - center).norm_sq();
    const double r2 = radius * radius;
    return closed ? d2 <= r2 : d2 < r2;
  }
};

}  // namespace spiralemb
