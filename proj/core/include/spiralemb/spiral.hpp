#pragma once

#include "spiralemb/geometry.hpp"
#include "spiralemb/planar_map.hpp"

namespace spiralemb {

/// Parameters of the simple spiral map on the open rectangle R(A, B).
///
/// theta_offset 0 gives the plain spiral, 1/2 the half-turn shifted variant.
/// orientation +1 uses the determinant-+1 sign convention (v carries a minus
/// sign); orientation -1 reproduces the raw polar formulas, whose Jacobian
/// determinant is -1 everywhere.
struct SpiralParams {
  double A = 1.0;
  double B = 1.0;
  double lambda = 1.0;
  double delta = 0.0;
  double r = 0.0;
  double theta_offset = 0.0;
  int orientation = +1;

  RectRegion domain() const { return RectRegion::from_size(A, B); }
  void validate() const;
};

struct ActionAngle {
  double action = 0.0;  // I, units of area
  double angle = 0.0;   // theta in [0, 1)
};

/// I = y*lambda + r + (x/lambda)*(B*lambda + delta); theta = x/lambda + offset mod 1.
ActionAngle spiral_action_angle(const SpiralParams& params, PlanarPoint p);

/// (u, v) with u^2 + v^2 = I / pi.
PlanarPoint spiral_eval(const SpiralParams& params, PlanarPoint p);

Mat2 spiral_jacobian(const SpiralParams& params, PlanarPoint p);

/// Radius of the ball containing the image of the subrectangle R(L, B).
double radius_bound(const SpiralParams& params, double L);

/// Radius of the closed disk the image avoids: sqrt(r / pi).
double inner_avoid_radius(const SpiralParams& params);

/// Membership in the closed parameter family set P.
bool param_set_contains(double A, double B, double lambda, double delta, double r);

/// Map2 adapter.
class SpiralMap final : public Map2 {
 public:
  explicit SpiralMap(SpiralParams params) : params_(params) { params_.validate(); }

  PlanarPoint operator()(PlanarPoint p) const override { return spiral_eval(params_, p); }
  std::optional<Mat2> jacobian(PlanarPoint p) const override {
    return spiral_jacobian(params_, p);
  }
  const SpiralParams& params() const { return params_; }

 private:
  SpiralParams params_;
};

}  // namespace spiralemb
