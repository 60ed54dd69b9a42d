#pragma once

#include <array>
#include <vector>

#include "spiralemb/geometry.hpp"

namespace spiralemb {

/// Smooth compactly supported plateau profile chi on the real line.
///
/// Constructed as a plateau-tent mollified by a compact bump, evaluated with
/// a fixed Gauss-Legendre rule. Satisfies, for admissible (A, eps):
///   - nondecreasing on R-, nonincreasing on R+
///   - chi == 1 on [-a, a] with a = eps^2
///   - chi == 0 off [-A + eps^2, A - eps^2]
///   - |chi'| <= 1/A + eps
///   - |chi(x) - (1 - |x|/A)| <= eps on [-A + eps/2, A - eps/2]
class CutoffProfile {
 public:
  static constexpr double kDefaultEps0 = 0.1;

  static CutoffProfile build(double A, double eps, double eps0 = kDefaultEps0);

  /// order 0 -> chi, 1 -> chi', 2 -> chi''. Defined on all of R.
  double eval(double x, int order = 0) const;
  double operator()(double x) const { return eval(x, 0); }

  double half_length() const { return A_; }        // A
  double eps() const { return eps_; }
  double plateau_half_width() const { return a_; } // a = eps^2

 private:
  CutoffProfile() = default;

  double base(double x) const;  // pre-mollification plateau tent

  /// Bump integral over (lo, hi) n (-w, w), by the scaled Gauss rule.
  double bump_mass(double lo, double hi) const;

  double A_ = 1.0;
  double eps_ = 0.1;
  double a_ = 0.01;
  double bump_width_ = 0.0025;   // mollifier half-support, eps^2/4
  double plateau_edge_ = 0.0;    // base profile is 1 on [-plateau_edge_, plateau_edge_]
  double support_edge_ = 0.0;    // base profile is 0 beyond
  double ramp_slope_ = 0.0;
  double norm_ = 1.0;            // full bump mass under the same quadrature
  // Gauss-Legendre reference rule on (-1, 1); the convolution against the
  // piecewise-linear base is evaluated per smooth piece, so chi' and chi''
  // are the derivatives of the implemented chi to quadrature precision.
  std::array<double, 32> gl_nodes_{};
  std::array<double, 32> gl_weights_{};
};

/// Time-1 flow of H = -chi(x1) * x2 * sqrt(pi).
Point4 flow_time1(const CutoffProfile& profile, Point4 q);

/// Closed-form 4x4 Jacobian of flow_time1, row-major, coordinates (x1,y1,x2,y2).
std::array<std::array<double, 4>, 4> flow_jacobian(const CutoffProfile& profile, Point4 q);

/// The horizontal strip (-A, A) x (-eps/2, eps/2).
struct StripModel {
  double A = 1.0;
  double eps = 0.1;

  RectRegion rect() const { return {2.0 * A, eps, {-A, -eps / 2.0}, false}; }
  bool contains(PlanarPoint p) const { return rect().contains(p); }
};

/// Bounding-rectangle model of the immersed domain and its two-rectangle cover.
///
/// The immersed set is the thin band strip + turn margins around y = 0; the
/// cover rectangles R1 (upper left) and R2 (lower right) are sized so that the
/// band and its flow images fit inside R1 union R2, overlapping exactly in the
/// column of the central strip E(4 eps^2).
struct DomainModel {
  double A = 1.0;
  double eps = 0.1;
  double turn_margin = 0.0;  // 0 -> default A*eps/2

  double turn() const { return turn_margin > 0.0 ? turn_margin : A * eps / 2.0; }
  double cover_width() const { return A + 4.0 * eps; }          // A~
  double cover_height() const { return kPi / A + 4.0 * eps; }   // B
  double central_half_width() const { return 2.0 * eps * eps; } // E(4 eps^2)

  RectRegion r1() const;
  RectRegion r2() const;
  RectRegion central_strip() const { return RectRegion::vertical_strip(4.0 * eps * eps); }
  /// W = (R1 u R2) n E(4 eps^2), a single rectangle in this placement.
  RectRegion w_rect() const;
  /// The sampled immersed band (strip plus turn margins).
  RectRegion band() const;
  StripModel strip() const { return {A, eps}; }

  /// Strand decomposition of the band for figure rendering: rows of height
  /// eps/2 spanning the band.
  std::vector<RectRegion> strands() const;
};

struct DomainSample {
  PlanarPoint p;
  bool in_r1 = false;
  bool in_r2 = false;
  bool in_strip = false;
  bool in_w = false;
};

/// Interior-offset grid over the immersed band, row-major, tagged.
std::vector<DomainSample> sample_domain(const DomainModel& model, int resolution);

/// The piecewise interleaving map: flow (p1, b) iff p1 lies in the strip.
/// b must lie in the open square Q(sqrt(pi)).
Point4 interleave_eval(const CutoffProfile& profile, const StripModel& strip,
                       PlanarPoint p1, PlanarPoint b);

}  // namespace spiralemb
