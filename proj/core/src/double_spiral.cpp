#include "spiralemb/double_spiral.hpp"

#include <cmath>

namespace spiralemb {

double min_m(double A, double eps) {
  if (!(A > 0.0) || !(eps > 0.0)) throw usage_error("min_m: require A, eps > 0");
  const double big_b = kPi / A + 4.0 * eps;
  const double w_area_bound = 8.0 * eps * eps * big_b;
  return 2.0 * w_area_bound / eps;
}

namespace {

// Squeeze scale: W fits a square of side s inscribed in the open target disk.
struct TuckGeometry {
  double eta;
  double target_radius;
};

TuckGeometry tuck_geometry(const DoubleSpiralConfig& config) {
  const RectRegion w = config.domain().w_rect();
  const double target_radius = std::sqrt(config.M * config.eps / kPi);
  if (config.M * config.eps < 2.0 * w.area()) {
    throw construction_error("tuck: M too small for area(W); raise M");
  }
  const double side = target_radius * std::sqrt(2.0) * 0.99;
  return {w.height / side, target_radius};
}

PlanarPoint beta2_local(const DoubleSpiralConfig& config, PlanarPoint p) {
  const RectRegion r2 = config.domain().r2();
  if (!r2.contains(p)) throw domain_error("beta2: point outside R2");
  return p - r2.anchor;
}

// Rotate R1 by pi and translate so the result is R(A~, B).
PlanarPoint beta1_local(const DoubleSpiralConfig& config, PlanarPoint p) {
  const RectRegion r1 = config.domain().r1();
  if (!r1.contains(p)) throw domain_error("beta1: point outside R1");
  const PlanarPoint far_corner = {r1.anchor.x + r1.width, r1.anchor.y + r1.height};
  return far_corner - p;
}

}  // namespace

DomainBranch classify(const DoubleSpiralConfig& config, PlanarPoint p) {
  const DomainModel model = config.domain();
  const bool in_e = std::fabs(p.x) < model.central_half_width();
  const bool in_r1 = model.r1().contains(p);
  const bool in_r2 = model.r2().contains(p);
  if (!in_r1 && !in_r2) throw usage_error("classify: point outside R1 u R2");
  if (in_e) return DomainBranch::Tuck;
  // Outside E the rectangles are disjoint.
  return in_r2 ? DomainBranch::Beta2 : DomainBranch::Beta1;
}

PlanarPoint beta2_eval(const DoubleSpiralConfig& config, PlanarPoint p) {
  return spiral_eval(config.beta2_params(), beta2_local(config, p));
}

PlanarPoint beta1_eval(const DoubleSpiralConfig& config, PlanarPoint p) {
  return spiral_eval(config.beta1_params(), beta1_local(config, p));
}

PlanarPoint tuck_eval(const DoubleSpiralConfig& config, PlanarPoint p) {
  const RectRegion w = config.domain().w_rect();
  if (!w.contains(p)) throw domain_error("tuck: point outside W");
  const TuckGeometry g = tuck_geometry(config);
  // W is centered at the origin; squeeze preserves area and the center.
  return {g.eta * p.x, p.y / g.eta};
}

Mat2 beta2_jacobian(const DoubleSpiralConfig& config, PlanarPoint p) {
  return spiral_jacobian(config.beta2_params(), beta2_local(config, p));
}

Mat2 beta1_jacobian(const DoubleSpiralConfig& config, PlanarPoint p) {
  // Local chart is p -> corner - p, linear part -Id (det +1).
  const Mat2 js = spiral_jacobian(config.beta1_params(), beta1_local(config, p));
  return js * Mat2{-1.0, 0.0, 0.0, -1.0};
}

Mat2 tuck_jacobian(const DoubleSpiralConfig& config) {
  const TuckGeometry g = tuck_geometry(config);
  return {g.eta, 0.0, 0.0, 1.0 / g.eta};
}

PlanarPoint double_spiral_eval(const DoubleSpiralConfig& config, const DomainSample& sample) {
  if (sample.in_w) return tuck_eval(config, sample.p);
  if (sample.in_r2) return beta2_eval(config, sample.p);
  if (sample.in_r1) return beta1_eval(config, sample.p);
  throw usage_error("double_spiral_eval: sample has no valid tag");
}

PlanarPoint double_spiral_eval(const DoubleSpiralConfig& config, PlanarPoint p) {
  switch (classify(config, p)) {
    case DomainBranch::Tuck:
      return tuck_eval(config, p);
    case DomainBranch::Beta2:
      return beta2_eval(config, p);
    case DomainBranch::Beta1:
      return beta1_eval(config, p);
  }
  throw usage_error("double_spiral_eval: unreachable");
}

}  // namespace spiralemb
