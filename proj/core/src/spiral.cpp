#include "spiralemb/spiral.hpp"

#include <cmath>

namespace spiralemb {

void SpiralParams::validate() const {
  if (!(A > 0.0) || !(B > 0.0) || !(lambda > 0.0) || !(delta >= 0.0) || !(r >= 0.0)) {
    throw usage_error("SpiralParams: require A,B,lambda > 0 and delta,r >= 0");
  }
  if (orientation != 1 && orientation != -1) {
    throw usage_error("SpiralParams: orientation must be +1 or -1");
  }
}

namespace {

void require_in_domain(const SpiralParams& params, PlanarPoint p) {
  if (!(p.x > 0.0 && p.x < params.A && p.y > 0.0 && p.y < params.B)) {
    throw domain_error("spiral: point outside the open rectangle R(A,B)");
  }
}

}  // namespace

ActionAngle spiral_action_angle(const SpiralParams& params, PlanarPoint p) {
  params.validate();
  require_in_domain(params, p);
  const double turns = p.x / params.lambda;
  const double action = p.y * params.lambda + params.r + turns * (params.B * params.lambda + params.delta);
  double t = turns + params.theta_offset;
  double angle = t - std::floor(t);
  if (angle >= 1.0) angle = 0.0;  // floor rounding at the wrap
  return {action, angle};
}

PlanarPoint spiral_eval(const SpiralParams& params, PlanarPoint p) {
  const ActionAngle aa = spiral_action_angle(params, p);
  if (!(aa.action > 0.0)) {
    throw domain_error("spiral: nonpositive action at rounding extreme");
  }
  const double rho = std::sqrt(aa.action / kPi);
  const double phase = 2.0 * kPi * aa.angle;
  const double sign = params.orientation == 1 ? -1.0 : 1.0;
  return {rho * std::cos(phase), sign * rho * std::sin(phase)};
}

Mat2 spiral_jacobian(const SpiralParams& params, PlanarPoint p) {
  const ActionAngle aa = spiral_action_angle(params, p);
  const double rho = std::sqrt(aa.action / kPi);
  const double phase = 2.0 * kPi * aa.angle;
  const double cosp = std::cos(phase);
  const double sinp = std::sin(phase);
  const double sign = params.orientation == 1 ? -1.0 : 1.0;
  // I_x = (B lambda + delta)/lambda, I_y = lambda, theta_x = 1/lambda,
  // rho_I = 1/(2 pi rho).
  const double ix = (params.B * params.lambda + params.delta) / params.lambda;
  const double iy = params.lambda;
  const double tx = 1.0 / params.lambda;
  const double rho_i = 1.0 / (2.0 * kPi * rho);
  const double ux = rho_i * ix * cosp - rho * 2.0 * kPi * tx * sinp;
  const double uy = rho_i * iy * cosp;
  const double vx = sign * (rho_i * ix * sinp + rho * 2.0 * kPi * tx * cosp);
  const double vy = sign * rho_i * iy * sinp;
  return {ux, uy, vx, vy};
}

double radius_bound(const SpiralParams& params, double L) {
  params.validate();
  if (!(L > 0.0 && L <= params.A)) throw usage_error("radius_bound: require 0 < L <= A");
  return std::sqrt((params.B * params.lambda + params.r + L * params.B +
                    L * params.delta / params.lambda) / kPi);
}

double inner_avoid_radius(const SpiralParams& params) {
  params.validate();
  return std::sqrt(params.r / kPi);
}

bool param_set_contains(double A, double B, double lambda, double delta, double r) {
  const bool base = A > 0.0 && B > 0.0 && lambda > 0.0;
  if (!base) return false;
  if (delta > 0.0 && r > 0.0) return true;
  if (delta > 0.0 && r == 0.0) return true;
  if (delta == 0.0 && r > 0.0) return true;
  return false;
}

}  // namespace spiralemb
