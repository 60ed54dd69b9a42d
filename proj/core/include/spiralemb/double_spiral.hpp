#pragma once

#include "spiralemb/geometry.hpp"
#include "spiralemb/planar_map.hpp"
#include "spiralemb/spiral.hpp"
#include "spiralemb/torus_strip.hpp"

namespace spiralemb {

/// Smallest M (in this implementation's convention) with M*eps >= 2*area(W),
/// using the area bound area(W) <= 8 eps^2 B.
double min_m(double A, double eps);

/// Constants of the two-spiral construction. Derived fields are recomputed on
/// demand, never stored.
struct DoubleSpiralConfig {
  double A = 1.0;
  double eps = 0.1;
  double M = 8.0;

  double a_tilde() const { return A + 4.0 * eps; }
  double big_b() const { return kPi / A + 4.0 * eps; }
  double lambda() const { return eps / big_b(); }  // lambda * B == eps
  double delta() const { return eps; }
  double r() const { return M * eps; }

  DomainModel domain() const { return {A, eps}; }
  SpiralParams beta2_params() const {
    return {a_tilde(), big_b(), lambda(), delta(), r(), 0.0, +1};
  }
  SpiralParams beta1_params() const {
    return {a_tilde(), big_b(), lambda(), delta(), r(), 0.5, +1};
  }

  static DoubleSpiralConfig with_default_m(double A, double eps) {
    return {A, eps, std::max(8.0, min_m(A, eps))};
  }
};

enum class DomainBranch { Beta1, Beta2, Tuck };

/// Classify a plane point of R1 u R2; W wins over the spirals.
DomainBranch classify(const DoubleSpiralConfig& config, PlanarPoint p);

PlanarPoint beta2_eval(const DoubleSpiralConfig& config, PlanarPoint p);
PlanarPoint beta1_eval(const DoubleSpiralConfig& config, PlanarPoint p);
PlanarPoint tuck_eval(const DoubleSpiralConfig& config, PlanarPoint p);

Mat2 beta2_jacobian(const DoubleSpiralConfig& config, PlanarPoint p);
Mat2 beta1_jacobian(const DoubleSpiralConfig& config, PlanarPoint p);
Mat2 tuck_jacobian(const DoubleSpiralConfig& config);

/// Dispatch by branch; accepts either a pre-tagged sample or a raw point.
PlanarPoint double_spiral_eval(const DoubleSpiralConfig& config, const DomainSample& sample);
PlanarPoint double_spiral_eval(const DoubleSpiralConfig& config, PlanarPoint p);

/// Map2 adapters over the pieces, in the plane coordinates of the cover.
class Beta2Map final : public Map2 {
 public:
  explicit Beta2Map(DoubleSpiralConfig c) : config_(c) {}
  PlanarPoint operator()(PlanarPoint p) const override { return beta2_eval(config_, p); }
  std::optional<Mat2> jacobian(PlanarPoint p) const override { return beta2_jacobian(config_, p); }

 private:
  DoubleSpiralConfig config_;
};

class Beta1Map final : public Map2 {
 public:
  explicit Beta1Map(DoubleSpiralConfig c) : config_(c) {}
  PlanarPoint operator()(PlanarPoint p) const override { return beta1_eval(config_, p); }
  std::optional<Mat2> jacobian(PlanarPoint p) const override { return beta1_jacobian(config_, p); }

 private:
  DoubleSpiralConfig config_;
};

class TuckMap final : public Map2 {
 public:
  explicit TuckMap(DoubleSpiralConfig c) : config_(c) {}
  PlanarPoint operator()(PlanarPoint p) const override { return tuck_eval(config_, p); }
  std::optional<Mat2> jacobian(PlanarPoint) const override { return tuck_jacobian(config_); }

 private:
  DoubleSpiralConfig config_;
};

}  // namespace spiralemb
