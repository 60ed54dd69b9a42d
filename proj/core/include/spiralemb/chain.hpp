#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spiralemb/double_spiral.hpp"
#include "spiralemb/geometry.hpp"
#include "spiralemb/spiral.hpp"
#include "spiralemb/torus_strip.hpp"

namespace spiralemb {

inline constexpr double kEps0 = 0.1;

struct ChainConstants {
  double C = 0.0;        // extremal constant of the |z1| half-bound
  double C_tilde = 0.0;  // C + 4/A
  double c = 0.0;        // 1 + 2C + 1/sqrt(pi) + 4/A
};

/// C = (1 + M + 8(A + 4 eps)) / (2 pi), the smallest constant valid over the
/// cover's x-range; C~ = C + 4/A; c = 1 + 2C + 1/sqrt(pi) + 4/A.
ChainConstants compute_constants(double eps, double A, double M);

struct ChainConfig {
  double eps = 0.1;
  double A = 1.0;
  double M = 8.0;

  DoubleSpiralConfig double_spiral() const { return {A, eps, M}; }
  /// Vertical-spiral parameters behind the map F.
  SpiralParams step1_params() const { return {2.0 * kSqrtPi, kSqrtPi, eps, 0.0, 0.0, 0.0, +1}; }
  ChainConstants constants() const { return compute_constants(eps, A, M); }
  double bound() const { return 3.0 + constants().c * eps; }

  static ChainConfig with_default_m(double eps, double A = 1.0) {
    return {eps, A, std::max(8.0, min_m(A, eps))};
  }
};

/// F on R(sqrt(pi), 2 sqrt(pi)): rotate by -pi/2, translate by (0, sqrt(pi)),
/// then the simple spiral with the step-1 parameters.
PlanarPoint f_eval(const ChainConfig& config, PlanarPoint p);
Mat2 f_jacobian(const ChainConfig& config, PlanarPoint p);

class FMap final : public Map2 {
 public:
  explicit FMap(ChainConfig c) : config_(c) {}
  PlanarPoint operator()(PlanarPoint p) const override { return f_eval(config_, p); }
  std::optional<Mat2> jacobian(PlanarPoint p) const override { return f_jacobian(config_, p); }

 private:
  ChainConfig config_;
};

/// One evaluated sample of the composite map, with the intermediate
/// coordinates the estimate chain reads.
struct JSample {
  Point4 mid;        // (x1, y1, x2, y2) after interleaving
  PlanarPoint z1;    // double-spiral image
  PlanarPoint z2;    // F image
  bool in_strip = false;

  double norm_sq() const { return z1.norm_sq() + z2.norm_sq(); }
};

JSample j_eval(const ChainConfig& config, const CutoffProfile& profile,
               PlanarPoint p1, PlanarPoint b);

/// Per-inequality outcome of the estimate chain on one sample. Slack >= 0
/// means the inequality holds.
struct BoundsRecord {
  static constexpr int kCount = 7;
  // z2_action, y2_range, z2_sq, z1_half, z1_cap, combined, total
  std::array<double, kCount> slack{};
  bool pass = false;

  static const std::array<const char*, kCount>& names();
};

BoundsRecord bounds_check(const ChainConfig& config, const JSample& sample);

struct ChainWorst {
  std::int64_t index = -1;
  PlanarPoint p1, b;
  double value = 0.0;
};

struct ChainSupResult {
  double sup = 0.0;
  double bound = 0.0;
  ChainConstants constants;
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  std::optional<ChainWorst> worst_violation;  // smallest violating index
  ChainWorst sup_at;
  bool passed = false;
};

/// Sample the composite map over (band grid) x (Q(sqrt(pi)) grid) plus seeded
/// random points, run the estimate chain at every sample, and track the sup of
/// |z1|^2 + |z2|^2. Deterministic for fixed inputs, independent of thread count.
ChainSupResult verify_main_bound(const ChainConfig& config, int band_resolution,
                                 int square_resolution, std::int64_t random_samples,
                                 std::uint64_t seed);

/// Planner output: cylinder size S = sqrt(eps) T against target radius
/// R = sqrt(3) + c eps, with the bookkeeping constants that tie them together.
struct PlanKH {
  double eps = 0.0;
  double T = 0.0;
  double S = 0.0;
  double R = 0.0;
  double c = 0.0;
  double C_kh = 0.0;     // 10 sqrt(c)
  double C_prime = 0.0;  // 9 c
  double target_outer = 0.0;       // C_kh S^2 / sqrt(R - sqrt(3))
  double inner_bookkeeping = 0.0;  // 10 sqrt(eps) T^2
  bool in_domain = false;          // sqrt(3) < R < sqrt(3) + C' S^2
};

PlanKH plan_kh(double eps, double T);

/// The eps-family: S = 1/(eps(1-eps)), R = sqrt(3)/(1-eps).
struct PlanFamily {
  double eps = 0.0;
  double S = 0.0;
  double R = 0.0;
  double domain_radius_1 = 0.0;  // 1 - eps
  double domain_radius_2 = 0.0;  // 1 / eps
  double target_radius_1 = 0.0;  // sqrt(3)
  double target_radius_2 = 0.0;  // 3^(-1/4) C_kh / sqrt(eps^5 (1 - eps))
  bool in_domain = false;
};

PlanFamily plan_family(double eps);

struct NestingReport {
  std::vector<double> eps_list;
  bool nesting_ok = false;
  bool exhaustion_ok = false;
  bool pass = false;
  std::vector<double> probe_witnesses;  // witness eps per probe point
};

/// Check the nesting hypotheses on the family domains over a decreasing list.
NestingReport check_nesting(const std::vector<double>& eps_list);

}  // namespace spiralemb
