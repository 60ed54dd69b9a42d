// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <spiralemb/chain.hpp>
#include <spiralemb/double_spiral.hpp>
#include <spiralemb/planar_map.hpp>
#include <spiralemb/spiral.hpp>
#include <spiralemb/torus_strip.hpp>
#include <spiralemb/verifier.hpp>

using namespace spiralemb;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int number, const std::string& name, bool pass, double seconds) {
  std::printf("[%s] criterion %2d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              seconds);
  if (!pass) ++g_failures;
}

template <typename Fn>
void criterion(int number, const std::string& name, const Fn& fn) {
  const auto start = Clock::now();
  bool pass = false;
  try {
    pass = fn();
  } catch (const std::exception& e) {
    std::printf("       exception: %s\n", e.what());
  }
  report(number, name, pass, std::chrono::duration<double>(Clock::now() - start).count());
}

double det4(const std::array<std::array<double, 4>, 4>& m) {
  auto det3 = [](double a, double b, double c, double d, double e, double f, double g, double h,
                 double i) { return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g); };
  return m[0][0] * det3(m[1][1], m[1][2], m[1][3], m[2][1], m[2][2], m[2][3], m[3][1], m[3][2],
                        m[3][3]) -
         m[0][1] * det3(m[1][0], m[1][2], m[1][3], m[2][0], m[2][2], m[2][3], m[3][0], m[3][2],
                        m[3][3]) +
         m[0][2] * det3(m[1][0], m[1][1], m[1][3], m[2][0], m[2][1], m[2][3], m[3][0], m[3][1],
                        m[3][3]) -
         m[0][3] * det3(m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2], m[3][0], m[3][1],
                        m[3][2]);
}

const SpiralParams kGeneric{1.0, 1.0, 0.1, 0.05, 0.2, 0.0, +1};

/// Analytic |det J - 1| over an interior grid, plus FD-determinant agreement
/// on a coarser subgrid.
bool symplectic_suite(const Map2& map, const RectRegion& region, double analytic_tol,
                      double fd_tol) {
  const SampleGrid grid{100, 100, 0, 0};
  const auto rep = check_symplectic(map, region, grid, analytic_tol);
  if (!rep.pass) return false;
  for (int j = 0; j < 20; ++j) {
    for (int i = 0; i < 20; ++i) {
      const PlanarPoint p{region.anchor.x + (i + 0.5) * region.width / 20,
                          region.anchor.y + (j + 0.5) * region.height / 20};
      const double fd = fd_jacobian(map, p).det();
      const double an = map.jacobian(p)->det();
      if (std::fabs(fd - an) > fd_tol) return false;
    }
  }
  return true;
}

std::int64_t hash_key(double x, double y, double cell) {
  const auto ix = static_cast<std::int64_t>(std::floor(x / cell));
  const auto iy = static_cast<std::int64_t>(std::floor(y / cell));
  return (ix << 32) ^ (iy & 0xffffffffLL);
}

/// True when no point of b lies within `cell` of any point of a.
bool disjoint_at(const std::vector<PlanarPoint>& a, const std::vector<PlanarPoint>& b,
                 double cell) {
  std::unordered_map<std::int64_t, std::vector<PlanarPoint>> hash;
  hash.reserve(a.size());
  for (PlanarPoint p : a) hash[hash_key(p.x, p.y, cell)].push_back(p);
  for (PlanarPoint q : b) {
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        const auto it = hash.find(hash_key(q.x + dx * cell, q.y + dy * cell, cell));
        if (it == hash.end()) continue;
        for (PlanarPoint p : it->second) {
          if ((p - q).norm() <= cell) return false;
        }
      }
    }
  }
  return true;
}

Point4 rk4_flow(const CutoffProfile& chi, Point4 q, int steps) {
  const double h = 1.0 / steps;
  auto rhs = [&](const Point4& s) {
    return Point4{0.0, chi.eval(s.x1, 1) * s.x2 * kSqrtPi, 0.0, chi.eval(s.x1, 0) * kSqrtPi};
  };
  for (int i = 0; i < steps; ++i) {
    const Point4 k1 = rhs(q);
    const Point4 k2 = rhs({q.x1, q.y1 + 0.5 * h * k1.y1, q.x2, q.y2 + 0.5 * h * k1.y2});
    const Point4 k3 = rhs({q.x1, q.y1 + 0.5 * h * k2.y1, q.x2, q.y2 + 0.5 * h * k2.y2});
    const Point4 k4 = rhs({q.x1, q.y1 + h * k3.y1, q.x2, q.y2 + h * k3.y2});
    q.y1 += h / 6.0 * (k1.y1 + 2 * k2.y1 + 2 * k3.y1 + k4.y1);
    q.y2 += h / 6.0 * (k1.y2 + 2 * k2.y2 + 2 * k3.y2 + k4.y2);
  }
  return q;
}

std::string run_capture(const std::string& cmd, int& exit_code) {
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return output;
  }
  char buf[512];
  while (fgets(buf, sizeof(buf), pipe)) output += buf;
  exit_code = WEXITSTATUS(pclose(pipe));
  return output;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const ChainConfig chain01 = ChainConfig::with_default_m(0.1);
  const DoubleSpiralConfig ds01 = chain01.double_spiral();

  criterion(1, "symplecticity: analytic 1e-12 at 10^4 points + FD 1e-4, under 10 s", [&] {
    if (!symplectic_suite(SpiralMap(kGeneric), kGeneric.domain(), 1e-12, 1e-4)) return false;
    if (!symplectic_suite(FMap(chain01), RectRegion::from_size(kSqrtPi, 2.0 * kSqrtPi), 1e-12,
                          1e-4)) {
      return false;
    }
    if (!symplectic_suite(Beta2Map(ds01), ds01.domain().r2(), 1e-12, 1e-4)) return false;
    if (!symplectic_suite(Beta1Map(ds01), ds01.domain().r1(), 1e-12, 1e-4)) return false;
    if (!symplectic_suite(TuckMap(ds01), ds01.domain().w_rect(), 1e-12, 1e-4)) return false;
    // 4D flow: |det J - 1| <= 1e-12 over a 10^4-state grid.
    const CutoffProfile chi = CutoffProfile::build(1.0, 0.1);
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        const Point4 q{-1.2 + 2.4 * (i + 0.5) / 100, 0.0, (j + 0.5) * kSqrtPi / 100, 0.0};
        if (std::fabs(det4(flow_jacobian(chi, q)) - 1.0) > 1e-12) return false;
      }
    }
    return true;
  });

  criterion(2, "raw-formula orientation fails with det = -1 everywhere", [&] {
    SpiralParams raw = kGeneric;
    raw.orientation = -1;
    const SpiralMap map(raw);
    const auto rep = check_symplectic(map, raw.domain(), {100, 100, 0, 0}, 1e-10, "spiral-raw");
    if (rep.pass || rep.violations != rep.samples) return false;
    for (int j = 0; j < 50; ++j) {
      for (int i = 0; i < 50; ++i) {
        const PlanarPoint p{(i + 0.5) / 50.0, (j + 0.5) / 50.0};
        if (std::fabs(spiral_jacobian(raw, p).det() + 1.0) > 1e-10) return false;
      }
    }
    return true;
  });

  criterion(3, "containment in B^2(r_L) for L in {A/4, A/2, A}, 5 parameter records", [&] {
    const std::vector<SpiralParams> records = {
        kGeneric,
        {1.0, 1.0, 0.05, 0.0, 0.3, 0.0, +1},
        {2.0, 0.5, 0.2, 0.1, 0.0, 0.5, +1},
        chain01.step1_params(),
        ds01.beta2_params(),
    };
    for (const SpiralParams& params : records) {
      const SpiralMap map(params);
      for (double frac : {0.25, 0.5, 1.0}) {
        const double L = frac * params.A;
        const RectRegion sub = RectRegion::from_size(L, params.B);
        const auto rep = check_contained(map, sub, {300, 300, 0, 0},
                                         BallRegion::open(radius_bound(params, L)), 1e-9);
        if (!rep.pass) return false;
      }
    }
    return true;
  });

  criterion(4, "inner-disk avoidance for r in {M eps, pi}; branch images pairwise disjoint", [&] {
    // r = M eps through the two-spiral branch parameters.
    const SpiralMap with_m(ds01.beta2_params());
    const double avoid_m = inner_avoid_radius(ds01.beta2_params());
    if (!check_avoids(with_m, ds01.beta2_params().domain(), {300, 300, 0, 0},
                      BallRegion::closed_ball(avoid_m))
             .pass) {
      return false;
    }
    SpiralParams with_pi = kGeneric;
    with_pi.r = kPi;
    if (!check_avoids(SpiralMap(with_pi), with_pi.domain(), {300, 300, 0, 0},
                      BallRegion::closed_ball(1.0))
             .pass) {
      return false;
    }
    // Pairwise disjoint branch images at 300x300 per branch, separation 1e-9.
    const DomainModel model = ds01.domain();
    const double a2 = model.central_half_width();
    auto branch_points = [&](const RectRegion& rect, bool skip_central, auto eval) {
      std::vector<PlanarPoint> pts;
      pts.reserve(90000);
      for (int j = 0; j < 300; ++j) {
        for (int i = 0; i < 300; ++i) {
          const PlanarPoint p{rect.anchor.x + (i + 0.5) * rect.width / 300,
                              rect.anchor.y + (j + 0.5) * rect.height / 300};
          if (skip_central && std::fabs(p.x) < a2) continue;
          pts.push_back(eval(p));
        }
      }
      return pts;
    };
    const auto b2 = branch_points(model.r2(), true, [&](PlanarPoint p) {
      return beta2_eval(ds01, p);
    });
    const auto b1 = branch_points(model.r1(), true, [&](PlanarPoint p) {
      return beta1_eval(ds01, p);
    });
    const auto tk = branch_points(model.w_rect(), false, [&](PlanarPoint p) {
      return tuck_eval(ds01, p);
    });
    return disjoint_at(b1, b2, 1e-9) && disjoint_at(b1, tk, 1e-9) && disjoint_at(b2, tk, 1e-9);
  });

  criterion(5, "cutoff: five constraints at 10^4 x-values, (A,eps) in {(1,.2),(1,.1),(1,.05)}",
            [&] {
    for (double eps : {0.2, 0.1, 0.05}) {
      const double A = 1.0;
      const CutoffProfile chi = CutoffProfile::build(A, eps, std::max(0.1, eps));
      double prev_neg = -1.0, prev_pos = 2.0;
      const int n = 10000;
      for (int i = 0; i < n; ++i) {
        const double x = -1.25 + 2.5 * (i + 0.5) / n;
        const double v = chi.eval(x, 0);
        const double d = chi.eval(x, 1);
        if (x < 0.0) {
          if (v < prev_neg - 1e-14) return false;
          prev_neg = v;
        } else {
          if (v > prev_pos + 1e-14) return false;
          prev_pos = v;
        }
        if (std::fabs(x) <= eps * eps && v != 1.0) return false;
        if (std::fabs(x) >= A - eps * eps && v != 0.0) return false;
        if (std::fabs(d) > 1.0 / A + eps) return false;
        if (std::fabs(x) <= A - eps / 2.0 && std::fabs(v - (1.0 - std::fabs(x) / A)) > eps) {
          return false;
        }
      }
    }
    return true;
  });

  criterion(6, "flow: closed form vs RK4(1000) within 1e-6 on 10^3 states; symplectic identity",
            [&] {
    const CutoffProfile chi = CutoffProfile::build(1.0, 0.1);
    const double omega[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.3, 1.3);
    for (int t = 0; t < 1000; ++t) {
      const Point4 q{u(rng), u(rng), u(rng), u(rng)};
      const Point4 a = flow_time1(chi, q);
      const Point4 b = rk4_flow(chi, q, 1000);
      if (a.x1 != q.x1 || a.x2 != q.x2) return false;
      if (std::fabs(a.y1 - b.y1) > 1e-6 || std::fabs(a.y2 - b.y2) > 1e-6) return false;
      const auto j = flow_jacobian(chi, q);
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          double acc = 0.0;
          for (int m = 0; m < 4; ++m) {
            for (int n = 0; n < 4; ++n) acc += j[m][r] * omega[m][n] * j[n][c];
          }
          if (std::fabs(acc - omega[r][c]) > 1e-10) return false;
        }
      }
    }
    return true;
  });

  criterion(7, "composite bound sup <= 3 + c eps over 10^6+ samples; sup nonincreasing in eps",
            [&] {
    double prev_sup = 1e9;
    for (double eps : {0.1, 0.05, 0.02}) {
      const auto start = Clock::now();
      const ChainConfig config = ChainConfig::with_default_m(eps);
      const ChainSupResult r = verify_main_bound(config, 120, 42, 160000, 20260823);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      std::printf("       eps=%.2f: sup=%.6f bound=%.6f samples=%lld violations=%lld "
                  "(%.1fs)\n",
                  eps, r.sup, r.bound, static_cast<long long>(r.samples),
                  static_cast<long long>(r.violations), secs);
      if (r.samples < 1000000 || r.violations != 0 || !r.passed) return false;
      if (r.sup > r.bound || r.sup >= prev_sup) return false;
      if (secs >= 60.0) return false;
      prev_sup = r.sup;
    }
    return true;
  });

  criterion(8, "planner identities to 1e-12 on a 20x20 grid; oracles; nesting", [&] {
    for (int ie = 0; ie < 20; ++ie) {
      for (int it = 0; it < 20; ++it) {
        const double eps = 0.005 + (0.1 - 0.005) * ie / 19.0;
        const double T = 0.34 + (3.0 - 0.34) * it / 19.0;
        const PlanKH plan = plan_kh(eps, T);
        const double lhs = plan.C_kh * plan.S * plan.S / std::sqrt(plan.R - std::sqrt(3.0));
        const double rhs = 10.0 * std::sqrt(eps) * T * T;
        if (std::fabs(lhs - rhs) > 1e-12 * std::max(1.0, std::fabs(rhs))) return false;
        if (!plan.in_domain) return false;
      }
    }
    const PlanFamily fam = plan_family(0.1);
    if (std::fabs(fam.S - 11.111111) > 1e-6) return false;
    if (std::fabs(fam.R - 1.9245009) > 1e-6) return false;
    return check_nesting({0.1, 0.05, 0.02, 0.01}).pass;
  });

  criterion(9, "area preservation within 2% at 10^6 samples: spiral, F, tuck", [&] {
    const SpiralMap spiral(kGeneric);
    const double a1 = estimate_area(spiral, kGeneric.domain(), 1000000, 7);
    if (std::fabs(a1 - 1.0) > 0.02) return false;
    const FMap f(chain01);
    const RectRegion fdom = RectRegion::from_size(kSqrtPi, 2.0 * kSqrtPi);
    const double a2 = estimate_area(f, fdom, 1000000, 7);
    if (std::fabs(a2 - 2.0 * kPi) / (2.0 * kPi) > 0.02) return false;
    const TuckMap tuck(ds01);
    const RectRegion w = ds01.domain().w_rect();
    const double a3 = estimate_area(tuck, w, 1000000, 7);
    return std::fabs(a3 - w.area()) / w.area() <= 0.02;
  });

  criterion(10, "figure: square-to-ball radius within 1% of 1/sqrt(pi); CSV byte-deterministic",
            [&] {
    const std::string cli = SPIRALEMB_CLI_PATH;
    const std::string csv1 = "/tmp/spiralemb_acc_fig1.csv";
    const std::string csv2 = "/tmp/spiralemb_acc_fig2.csv";
    int code = 0;
    setenv("SPIRALEMB_THREADS", "1", 1);
    const std::string out = run_capture(
        cli + " figure --name square-to-ball --points-out " + csv1 + " 2>/dev/null", code);
    if (code != 0) return false;
    // Parse "outer_radius": value from the summary line.
    const std::string key = "\"outer_radius\":";
    const auto pos = out.find(key);
    if (pos == std::string::npos) return false;
    const double outer = std::strtod(out.c_str() + pos + key.size(), nullptr);
    const double unit = 1.0 / kSqrtPi;
    if (std::fabs(outer - unit) / unit > 0.01) return false;
    setenv("SPIRALEMB_THREADS", "4", 1);
    run_capture(cli + " figure --name square-to-ball --points-out " + csv2 + " 2>/dev/null",
                code);
    unsetenv("SPIRALEMB_THREADS");
    if (code != 0) return false;
    const std::string bytes1 = slurp(csv1);
    return !bytes1.empty() && bytes1 == slurp(csv2);
  });

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
