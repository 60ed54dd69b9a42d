#include "spiralemb/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "spiralemb/parallel.hpp"

namespace spiralemb {

namespace {

constexpr std::int64_t kBlockSize = 8192;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Per-block accumulator for pointwise checks; blocks are merged in order so
/// the report is independent of the worker count.
struct BlockAcc {
  std::int64_t violations = 0;
  std::optional<Violation> worst;  // smallest index in the block
  double max_value = -kInf;
  double min_value = kInf;
};

/// Evaluate value(p) at every sample; a sample violates when slack(value) < 0.
/// Returns per-sample extrema of value and the first (lowest-index) violation.
template <typename ValueFn, typename SlackFn>
void run_pointwise(const std::vector<PlanarPoint>& samples, const ValueFn& value,
                   const SlackFn& slack, VerificationReport& report) {
  const std::int64_t n = static_cast<std::int64_t>(samples.size());
  const int blocks = static_cast<int>((n + kBlockSize - 1) / kBlockSize);
  std::vector<BlockAcc> acc(blocks);
  parallel_blocks(blocks, [&](int block) {
    BlockAcc& a = acc[block];
    const std::int64_t lo = block * kBlockSize;
    const std::int64_t hi = std::min(n, lo + kBlockSize);
    for (std::int64_t i = lo; i < hi; ++i) {
      const double v = value(samples[i]);
      a.max_value = std::max(a.max_value, v);
      a.min_value = std::min(a.min_value, v);
      const double s = slack(v);
      if (s < 0.0) {
        ++a.violations;
        if (!a.worst) a.worst = Violation{i, samples[i], s};
      }
    }
  });
  double max_value = -kInf;
  double min_value = kInf;
  for (const BlockAcc& a : acc) {
    report.violations += a.violations;
    if (a.worst && !report.worst) report.worst = a.worst;
    max_value = std::max(max_value, a.max_value);
    min_value = std::min(min_value, a.min_value);
  }
  report.samples = n;
  report.extrema["max_value"] = max_value;
  report.extrema["min_value"] = min_value;
  report.pass = report.violations == 0;
}

std::int64_t cell_key(std::int64_t ix, std::int64_t iy) {
  return (ix << 32) ^ (iy & 0xffffffffLL);
}

}  // namespace

std::vector<PlanarPoint> SampleGrid::enumerate(const RectRegion& region) const {
  if (nx < 1 || ny < 1 || random_count < 0) {
    throw usage_error("SampleGrid: require nx, ny >= 1 and random_count >= 0");
  }
  if (region.unbounded_height) {
    throw usage_error("SampleGrid: cannot enumerate an unbounded region");
  }
  std::vector<PlanarPoint> out;
  out.reserve(static_cast<std::size_t>(total()));
  const double dx = region.width / nx;
  const double dy = region.height / ny;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      out.push_back({region.anchor.x + (i + 0.5) * dx, region.anchor.y + (j + 0.5) * dy});
    }
  }
  if (random_count > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(region.anchor.x, region.anchor.x + region.width);
    std::uniform_real_distribution<double> uy(region.anchor.y, region.anchor.y + region.height);
    for (std::int64_t k = 0; k < random_count; ++k) {
      out.push_back({ux(rng), uy(rng)});
    }
  }
  return out;
}

Mat2 fd_jacobian(const Map2& map, PlanarPoint p, double step) {
  if (!(step > 0.0)) throw usage_error("fd_jacobian: step must be positive");
  const PlanarPoint xp = map({p.x + step, p.y});
  const PlanarPoint xm = map({p.x - step, p.y});
  const PlanarPoint yp = map({p.x, p.y + step});
  const PlanarPoint ym = map({p.x, p.y - step});
  const double inv = 1.0 / (2.0 * step);
  return {(xp.x - xm.x) * inv, (yp.x - ym.x) * inv,
          (xp.y - xm.y) * inv, (yp.y - ym.y) * inv};
}

VerificationReport check_symplectic(const Map2& map, const RectRegion& region,
                                    const SampleGrid& grid, double tol,
                                    const std::string& map_id) {
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "symplectic";
  report.map_id = map_id;
  report.seed = grid.seed;
  report.params = {{"nx", double(grid.nx)}, {"ny", double(grid.ny)},
                   {"random_count", double(grid.random_count)}, {"tol", tol}};
  const std::vector<PlanarPoint> samples = grid.enumerate(region);
  run_pointwise(
      samples,
      [&](PlanarPoint p) {
        const std::optional<Mat2> j = map.jacobian(p);
        const double det = j ? j->det() : fd_jacobian(map, p).det();
        return std::fabs(det - 1.0);
      },
      [tol](double err) { return tol - err; }, report);
  report.extrema["max_abs_det_minus_one"] = report.extrema["max_value"];
  report.wall_time_s = seconds_since(start);
  return report;
}

VerificationReport check_injective(const Map2& map, const RectRegion& region,
                                   const SampleGrid& grid, double image_tol,
                                   double domain_sep, const std::string& map_id) {
  if (!(image_tol > 0.0) || !(domain_sep >= 0.0)) {
    throw usage_error("check_injective: require image_tol > 0 and domain_sep >= 0");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "injective";
  report.map_id = map_id;
  report.seed = grid.seed;
  report.params = {{"nx", double(grid.nx)}, {"ny", double(grid.ny)},
                   {"random_count", double(grid.random_count)},
                   {"image_tol", image_tol}, {"domain_sep", domain_sep}};
  const std::vector<PlanarPoint> samples = grid.enumerate(region);
  const std::int64_t n = static_cast<std::int64_t>(samples.size());
  std::vector<PlanarPoint> images(samples.size());
  const int blocks = static_cast<int>((n + kBlockSize - 1) / kBlockSize);
  parallel_blocks(blocks, [&](int block) {
    const std::int64_t lo = block * kBlockSize;
    const std::int64_t hi = std::min(n, lo + kBlockSize);
    for (std::int64_t i = lo; i < hi; ++i) images[i] = map(samples[i]);
  });

  // Spatial hash at the image tolerance scale: any pair closer than image_tol
  // shares a cell or lives in adjacent cells.
  std::unordered_map<std::int64_t, std::vector<std::int64_t>> hash;
  hash.reserve(samples.size());
  const double cell = image_tol;
  double min_far_sep = kInf;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t ix = static_cast<std::int64_t>(std::floor(images[i].x / cell));
    const std::int64_t iy = static_cast<std::int64_t>(std::floor(images[i].y / cell));
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = hash.find(cell_key(ix + dx, iy + dy));
        if (it == hash.end()) continue;
        for (std::int64_t j : it->second) {
          const PlanarPoint di = images[i] - images[j];
          const PlanarPoint dd = samples[i] - samples[j];
          if (dd.norm_sq() <= domain_sep * domain_sep) continue;
          const double sep = di.norm();
          min_far_sep = std::min(min_far_sep, sep);
          if (sep < image_tol) {
            ++report.violations;
            if (!report.worst) report.worst = Violation{i, samples[i], sep - image_tol};
          }
        }
      }
    }
    hash[cell_key(ix, iy)].push_back(i);
  }
  report.samples = n;
  report.extrema["min_image_separation_far_pairs"] = min_far_sep;
  report.pass = report.violations == 0;
  report.wall_time_s = seconds_since(start);
  return report;
}

VerificationReport check_contained(const Map2& map, const RectRegion& region,
                                   const SampleGrid& grid, const BallRegion& ball,
                                   double tol, const std::string& map_id) {
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "contained";
  report.map_id = map_id;
  report.seed = grid.seed;
  report.params = {{"nx", double(grid.nx)}, {"ny", double(grid.ny)},
                   {"random_count", double(grid.random_count)},
                   {"radius", ball.radius}, {"tol", tol}};
  const std::vector<PlanarPoint> samples = grid.enumerate(region);
  const double limit = ball.radius + tol;
  run_pointwise(
      samples,
      [&](PlanarPoint p) { return (map(p) - ball.center).norm(); },
      [limit](double dist) { return limit - dist; }, report);
  report.extrema["max_image_radius"] = report.extrema["max_value"];
  report.wall_time_s = seconds_since(start);
  return report;
}

VerificationReport check_avoids(const Map2& map, const RectRegion& region,
                                const SampleGrid& grid, const BallRegion& closed_ball,
                                const std::string& map_id) {
  if (!closed_ball.closed) {
    throw usage_error("check_avoids: the avoided ball must be closed");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "avoids";
  report.map_id = map_id;
  report.seed = grid.seed;
  report.params = {{"nx", double(grid.nx)}, {"ny", double(grid.ny)},
                   {"random_count", double(grid.random_count)},
                   {"radius", closed_ball.radius}};
  const std::vector<PlanarPoint> samples = grid.enumerate(region);
  const double radius = closed_ball.radius;
  run_pointwise(
      samples,
      [&](PlanarPoint p) { return (map(p) - closed_ball.center).norm(); },
      [radius](double dist) { return dist > radius ? dist - radius : -1.0; }, report);
  report.extrema["min_image_radius"] = report.extrema["min_value"];
  report.wall_time_s = seconds_since(start);
  return report;
}

double estimate_area(const Map2& map, const RectRegion& region, std::int64_t samples,
                     std::uint64_t seed) {
  if (samples < 10000) throw usage_error("estimate_area: require samples >= 10^4");
  if (region.unbounded_height) throw usage_error("estimate_area: region must be bounded");
  const double s = std::sqrt(region.area() / static_cast<double>(samples));

  // Probe the map's stretch on a coarse grid so the dense grid spacing keeps
  // adjacent image points within half an occupancy cell per axis.
  double lx = 0.0;
  double ly = 0.0;
  const int probe = 33;
  for (int j = 0; j < probe; ++j) {
    for (int i = 0; i < probe; ++i) {
      const PlanarPoint p{region.anchor.x + (i + 0.5) * region.width / probe,
                          region.anchor.y + (j + 0.5) * region.height / probe};
      const std::optional<Mat2> ja = map.jacobian(p);
      const Mat2 m = ja ? *ja : fd_jacobian(map, p, 1e-6 * std::min(region.width, region.height));
      lx = std::max(lx, std::hypot(m.a, m.c));
      ly = std::max(ly, std::hypot(m.b, m.d));
    }
  }
  const double target = s / 2.0;
  auto res_for = [target](double extent, double stretch) {
    const double need = extent * std::max(stretch, 1e-12) / target;
    return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil(need)), 64, 200000000);
  };
  std::int64_t nx = res_for(region.width, lx);
  std::int64_t ny = res_for(region.height, ly);
  const std::int64_t cap = 30000000;
  if (nx * ny > cap) {
    const double shrink = std::sqrt(static_cast<double>(cap) / static_cast<double>(nx) /
                                    static_cast<double>(ny));
    nx = std::max<std::int64_t>(64, static_cast<std::int64_t>(nx * shrink));
    ny = std::max<std::int64_t>(64, static_cast<std::int64_t>(ny * shrink));
  }

  std::unordered_set<std::int64_t> occupied;
  occupied.reserve(static_cast<std::size_t>(samples));
  auto mark = [&](PlanarPoint q) {
    const std::int64_t ix = static_cast<std::int64_t>(std::floor(q.x / s));
    const std::int64_t iy = static_cast<std::int64_t>(std::floor(q.y / s));
    occupied.insert(cell_key(ix, iy));
  };
  for (std::int64_t j = 0; j < ny; ++j) {
    const double y = region.anchor.y + (j + 0.5) * region.height / ny;
    for (std::int64_t i = 0; i < nx; ++i) {
      mark(map({region.anchor.x + (i + 0.5) * region.width / nx, y}));
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(region.anchor.x, region.anchor.x + region.width);
  std::uniform_real_distribution<double> uy(region.anchor.y, region.anchor.y + region.height);
  for (std::int64_t k = 0; k < samples; ++k) {
    mark(map({ux(rng), uy(rng)}));
  }

  // Boundary cells straddle the image edge and are half-covered on average,
  // biasing the raw cell count upward by ~perimeter/(2s) cells. Averaging the
  // occupied count with its 4-neighbor erosion cancels that bias to first
  // order.
  std::int64_t eroded = 0;
  for (std::int64_t key : occupied) {
    const std::int64_t ix = key >> 32;
    const std::int64_t iy = static_cast<std::int32_t>(key & 0xffffffffLL);
    const bool interior = occupied.count(cell_key(ix + 1, iy)) &&
                          occupied.count(cell_key(ix - 1, iy)) &&
                          occupied.count(cell_key(ix, iy + 1)) &&
                          occupied.count(cell_key(ix, iy - 1));
    if (interior) ++eroded;
  }
  const double cells = 0.5 * (static_cast<double>(occupied.size()) + static_cast<double>(eroded));
  return cells * s * s;
}

}  // namespace spiralemb
