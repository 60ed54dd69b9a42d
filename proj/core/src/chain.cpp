#include "spiralemb/chain.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spiralemb/parallel.hpp"

namespace spiralemb {

ChainConstants compute_constants(double eps, double A, double M) {
  if (!(eps > 0.0) || !(A > 0.0) || !(M >= 0.0)) {
    throw usage_error("compute_constants: require eps, A > 0 and M >= 0");
  }
  ChainConstants k;
  k.C = (1.0 + M + 8.0 * (A + 4.0 * eps)) / (2.0 * kPi);
  k.C_tilde = k.C + 4.0 / A;
  k.c = 1.0 + 2.0 * k.C + 1.0 / kSqrtPi + 4.0 / A;
  return k;
}

PlanarPoint f_eval(const ChainConfig& config, PlanarPoint p) {
  if (!(p.x > 0.0 && p.x < kSqrtPi && p.y > 0.0 && p.y < 2.0 * kSqrtPi)) {
    throw domain_error("f_eval: point outside R(sqrt(pi), 2 sqrt(pi))");
  }
  const PlanarPoint rotated{p.y, kSqrtPi - p.x};
  return spiral_eval(config.step1_params(), rotated);
}

Mat2 f_jacobian(const ChainConfig& config, PlanarPoint p) {
  if (!(p.x > 0.0 && p.x < kSqrtPi && p.y > 0.0 && p.y < 2.0 * kSqrtPi)) {
    throw domain_error("f_jacobian: point outside R(sqrt(pi), 2 sqrt(pi))");
  }
  const PlanarPoint rotated{p.y, kSqrtPi - p.x};
  const Mat2 js = spiral_jacobian(config.step1_params(), rotated);
  return js * Mat2{0.0, 1.0, -1.0, 0.0};
}

JSample j_eval(const ChainConfig& config, const CutoffProfile& profile,
               PlanarPoint p1, PlanarPoint b) {
  const DoubleSpiralConfig ds = config.double_spiral();
  const StripModel strip = ds.domain().strip();
  JSample s;
  s.in_strip = strip.contains(p1);
  s.mid = interleave_eval(profile, strip, p1, b);
  s.z1 = double_spiral_eval(ds, PlanarPoint{s.mid.x1, s.mid.y1});
  s.z2 = f_eval(config, PlanarPoint{s.mid.x2, s.mid.y2});
  return s;
}

const std::array<const char*, BoundsRecord::kCount>& BoundsRecord::names() {
  static const std::array<const char*, kCount> n = {
      "z2_action", "y2_range", "z2_sq", "z1_half", "z1_cap", "combined", "total"};
  return n;
}

BoundsRecord bounds_check(const ChainConfig& config, const JSample& sample) {
  const ChainConstants k = config.constants();
  const double eps = config.eps;
  const double abs_x1 = std::fabs(sample.mid.x1);
  const double y2 = sample.mid.y2;
  const double z1_sq = sample.z1.norm_sq();
  const double z2_sq = sample.z2.norm_sq();

  BoundsRecord rec;
  rec.slack[0] = (y2 + eps) / kSqrtPi - z2_sq;
  rec.slack[1] = std::min(y2, kSqrtPi * (2.0 - abs_x1 / config.A + eps) - y2);
  rec.slack[2] = 2.0 - abs_x1 / config.A + eps * (1.0 + 1.0 / kSqrtPi) - z2_sq;
  rec.slack[3] = abs_x1 / config.A + k.C * eps - z1_sq / 2.0;
  rec.slack[4] = 1.0 + k.C_tilde * eps - z1_sq / 2.0;
  rec.slack[5] = 2.0 + (1.0 + k.C + 1.0 / kSqrtPi) * eps - (z1_sq / 2.0 + z2_sq);
  rec.slack[6] = config.bound() - (z1_sq + z2_sq);
  rec.pass = std::all_of(rec.slack.begin(), rec.slack.end(),
                         [](double s) { return s >= 0.0; });
  return rec;
}

namespace {

struct BlockResult {
  double sup = 0.0;
  ChainWorst sup_at;
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  std::optional<ChainWorst> worst_violation;
};

void account(BlockResult& r, const ChainConfig& config, const CutoffProfile& profile,
             PlanarPoint p1, PlanarPoint b, std::int64_t index) {
  const JSample s = j_eval(config, profile, p1, b);
  const double value = s.norm_sq();
  ++r.samples;
  if (value > r.sup) {
    r.sup = value;
    r.sup_at = {index, p1, b, value};
  }
  const BoundsRecord rec = bounds_check(config, s);
  if (!rec.pass) {
    ++r.violations;
    if (!r.worst_violation) {
      double worst_slack = 0.0;
      for (double sl : rec.slack) worst_slack = std::min(worst_slack, sl);
      r.worst_violation = {index, p1, b, worst_slack};
    }
  }
}

}  // namespace

ChainSupResult verify_main_bound(const ChainConfig& config, int band_resolution,
                                 int square_resolution, std::int64_t random_samples,
                                 std::uint64_t seed) {
  if (band_resolution < 2 || square_resolution < 2) {
    throw usage_error("verify_main_bound: resolutions must be >= 2");
  }
  const CutoffProfile profile = CutoffProfile::build(config.A, config.eps);
  const DomainModel model = config.double_spiral().domain();
  const RectRegion band = model.band();

  const int ny = 5;
  const int nb = square_resolution;
  const std::int64_t per_x = static_cast<std::int64_t>(ny) * nb * nb;
  const int random_blocks = random_samples > 0 ? 16 : 0;
  const int blocks = band_resolution + random_blocks;
  std::vector<BlockResult> results(blocks);

  parallel_blocks(blocks, [&](int block) {
    BlockResult& r = results[block];
    if (block < band_resolution) {
      const double x1 = band.anchor.x + (block + 0.5) * band.width / band_resolution;
      std::int64_t index = static_cast<std::int64_t>(block) * per_x;
      for (int jy = 0; jy < ny; ++jy) {
        const double y1 = band.anchor.y + (jy + 0.5) * band.height / ny;
        for (int ib = 0; ib < nb; ++ib) {
          const double b1 = (ib + 0.5) * kSqrtPi / nb;
          for (int jb = 0; jb < nb; ++jb) {
            const double b2 = (jb + 0.5) * kSqrtPi / nb;
            account(r, config, profile, {x1, y1}, {b1, b2}, index++);
          }
        }
      }
    } else {
      const int rb = block - band_resolution;
      const std::int64_t base = static_cast<std::int64_t>(band_resolution) * per_x;
      std::int64_t count = random_samples / random_blocks;
      if (rb == random_blocks - 1) count += random_samples % random_blocks;
      std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (rb + 1));
      std::uniform_real_distribution<double> ux(band.anchor.x, band.anchor.x + band.width);
      std::uniform_real_distribution<double> uy(band.anchor.y, band.anchor.y + band.height);
      std::uniform_real_distribution<double> ub(0.0, kSqrtPi);
      std::int64_t index = base + rb * (random_samples / random_blocks);
      for (std::int64_t i = 0; i < count; ++i) {
        const PlanarPoint p1{ux(rng), uy(rng)};
        const PlanarPoint b{ub(rng), ub(rng)};
        account(r, config, profile, p1, b, index++);
      }
    }
  });

  ChainSupResult out;
  out.bound = config.bound();
  out.constants = config.constants();
  for (const BlockResult& r : results) {
    out.samples += r.samples;
    out.violations += r.violations;
    if (r.sup > out.sup) {
      out.sup = r.sup;
      out.sup_at = r.sup_at;
    }
    if (r.worst_violation &&
        (!out.worst_violation || r.worst_violation->index < out.worst_violation->index)) {
      out.worst_violation = r.worst_violation;
    }
  }
  out.passed = out.violations == 0 && out.sup <= out.bound;
  return out;
}

PlanKH plan_kh(double eps, double T) {
  if (!(eps > 0.0) || eps > kEps0) throw domain_error("plan_kh: require 0 < eps <= eps0");
  if (!(T > 1.0 / 3.0)) throw domain_error("plan_kh: require T > 1/3");
  const ChainConfig config = ChainConfig::with_default_m(eps);
  PlanKH plan;
  plan.eps = eps;
  plan.T = T;
  plan.c = config.constants().c;
  plan.S = std::sqrt(eps) * T;
  plan.R = std::sqrt(3.0) + plan.c * eps;
  plan.C_kh = 10.0 * std::sqrt(plan.c);
  plan.C_prime = 9.0 * plan.c;
  plan.target_outer = plan.C_kh * plan.S * plan.S / std::sqrt(plan.R - std::sqrt(3.0));
  plan.inner_bookkeeping = 10.0 * std::sqrt(eps) * T * T;
  plan.in_domain = plan.S > 0.0 && plan.R > std::sqrt(3.0) &&
                   plan.R < std::sqrt(3.0) + plan.C_prime * plan.S * plan.S;
  return plan;
}

PlanFamily plan_family(double eps) {
  if (!(eps > 0.0) || eps > kEps0 || eps >= 1.0) {
    throw domain_error("plan_family: require 0 < eps <= eps0");
  }
  const ChainConfig config = ChainConfig::with_default_m(eps);
  const double c = config.constants().c;
  const double c_kh = 10.0 * std::sqrt(c);
  PlanFamily plan;
  plan.eps = eps;
  plan.S = 1.0 / (eps * (1.0 - eps));
  plan.R = std::sqrt(3.0) / (1.0 - eps);
  plan.domain_radius_1 = 1.0 - eps;
  plan.domain_radius_2 = 1.0 / eps;
  plan.target_radius_1 = std::sqrt(3.0);
  plan.target_radius_2 =
      std::pow(3.0, -0.25) * c_kh / std::sqrt(std::pow(eps, 5) * (1.0 - eps));
  const double c_prime = 9.0 * c;
  plan.in_domain = plan.R > std::sqrt(3.0) &&
                   plan.R < std::sqrt(3.0) + c_prime * plan.S * plan.S;
  return plan;
}

NestingReport check_nesting(const std::vector<double>& eps_list) {
  if (eps_list.size() < 2) throw usage_error("check_nesting: need at least two values");
  for (double e : eps_list) {
    if (!(e > 0.0) || e > kEps0) throw usage_error("check_nesting: values must lie in (0, eps0]");
  }
  for (std::size_t i = 1; i < eps_list.size(); ++i) {
    if (!(eps_list[i] < eps_list[i - 1])) {
      throw usage_error("check_nesting: list must be strictly decreasing");
    }
  }
  NestingReport report;
  report.eps_list = eps_list;
  report.nesting_ok = true;
  // W_t = B^2(1-t) x B^{2(n-1)}(1/t); for t < s the closure of W_s must sit
  // strictly inside W_t.
  for (std::size_t i = 1; i < eps_list.size(); ++i) {
    const double s = eps_list[i - 1];
    const double t = eps_list[i];
    const bool ok = (1.0 - s) < (1.0 - t) && (1.0 / s) < (1.0 / t);
    report.nesting_ok = report.nesting_ok && ok;
  }
  // Exhaustion witnesses for probes of B^2(1) x R^{2(n-1)}.
  const PlanarPoint probes[] = {{0.5, 1.0}, {0.9, 10.0}, {0.999, 50.0}, {0.9999, 1000.0}};
  report.exhaustion_ok = true;
  for (const PlanarPoint& probe : probes) {
    const double witness = 0.5 * std::min({1.0 - probe.x, 1.0 / probe.y, kEps0});
    const bool contained = (1.0 - witness) > probe.x && (1.0 / witness) > probe.y;
    report.exhaustion_ok = report.exhaustion_ok && contained && witness > 0.0;
    report.probe_witnesses.push_back(witness);
  }
  report.pass = report.nesting_ok && report.exhaustion_ok;
  return report;
}

}  // namespace spiralemb
