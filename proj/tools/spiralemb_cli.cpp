// Command-line front end: evaluate the spiral-family maps, run the numeric
// certification checks, execute the parameter planners, and emit CSV/SVG/JSON
// artifacts. Exit codes: 0 success, 1 verification/I-O failure, 2 usage error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <spiralemb/chain.hpp>
#include <spiralemb/double_spiral.hpp>
#include <spiralemb/planar_map.hpp>
#include <spiralemb/report_json.hpp>
#include <spiralemb/spiral.hpp>
#include <spiralemb/svg.hpp>
#include <spiralemb/torus_strip.hpp>
#include <spiralemb/verifier.hpp>

namespace {

using namespace spiralemb;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string csv_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::array<double, 4>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "x,y,u,v\n";
  for (const auto& r : rows) {
    out << csv_num(r[0]) << ',' << csv_num(r[1]) << ',' << csv_num(r[2]) << ','
        << csv_num(r[3]) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

/// Optional JSON config file whose keys mirror long flag names (without the
/// leading dashes); explicit flags override config values.
class ConfigOverlay {
 public:
  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    in >> data_;
    if (!data_.is_object()) throw usage_error("config file must hold a JSON object");
  }

  void bind(CLI::Option* opt, const std::string& key, double* target) {
    doubles_.push_back({opt, key, target});
  }
  void bind(CLI::Option* opt, const std::string& key, int* target) {
    ints_.push_back({opt, key, target});
  }
  void bind(CLI::Option* opt, const std::string& key, std::string* target) {
    strings_.push_back({opt, key, target});
  }

  /// Called after parsing: fill in unset options from the config object.
  void apply() const {
    for (const auto& [opt, key, target] : doubles_) {
      if (opt->count() == 0 && data_.contains(key)) *target = data_.at(key).get<double>();
    }
    for (const auto& [opt, key, target] : ints_) {
      if (opt->count() == 0 && data_.contains(key)) *target = data_.at(key).get<int>();
    }
    for (const auto& [opt, key, target] : strings_) {
      if (opt->count() == 0 && data_.contains(key)) *target = data_.at(key).get<std::string>();
    }
  }

 private:
  template <typename T>
  struct Binding {
    CLI::Option* opt;
    std::string key;
    T* target;
  };
  json data_ = json::object();
  std::vector<Binding<double>> doubles_;
  std::vector<Binding<int>> ints_;
  std::vector<Binding<std::string>> strings_;
};

struct SpiralFlags {
  double A = 1.0, B = 1.0, lambda = 0.05, delta = 0.0, r = 0.0, theta_offset = 0.0;
  int orientation = +1;

  SpiralParams params() const { return {A, B, lambda, delta, r, theta_offset, orientation}; }
  void add(CLI::App* cmd, ConfigOverlay& cfg) {
    cfg.bind(cmd->add_option("--A", A, "domain width"), "A", &A);
    cfg.bind(cmd->add_option("--B", B, "domain height"), "B", &B);
    cfg.bind(cmd->add_option("--lambda", lambda, "strand thickness control"), "lambda", &lambda);
    cfg.bind(cmd->add_option("--delta", delta, "inter-turn gap"), "delta", &delta);
    cfg.bind(cmd->add_option("--r", r, "action offset"), "r", &r);
    cfg.bind(cmd->add_option("--theta-offset", theta_offset, "angle offset (0 or 1/2)"),
             "theta-offset", &theta_offset);
    cmd->add_option("--orientation", orientation, "+1 or -1")->check(CLI::IsMember({1, -1}));
  }
};

struct DoubleSpiralFlags {
  double eps = 0.1, A = 1.0, M = 0.0;  // M = 0 -> default max(8, min_m)

  DoubleSpiralConfig config() const {
    return M > 0.0 ? DoubleSpiralConfig{A, eps, M} : DoubleSpiralConfig::with_default_m(A, eps);
  }
  void add(CLI::App* cmd, ConfigOverlay& cfg, const std::string& a_flag = "--A") {
    cfg.bind(cmd->add_option("--epsilon", eps, "construction parameter"), "epsilon", &eps);
    cfg.bind(cmd->add_option(a_flag, A, "strip half-length"),
             a_flag.substr(2), &A);
    cfg.bind(cmd->add_option("--M", M, "action offset multiple (0 = default)"), "M", &M);
  }
};

std::vector<std::array<double, 4>> map_grid_rows(const Map2& map, const RectRegion& region,
                                                 int grid) {
  SampleGrid g;
  g.nx = grid;
  g.ny = grid;
  std::vector<std::array<double, 4>> rows;
  rows.reserve(static_cast<std::size_t>(grid) * grid);
  for (PlanarPoint p : g.enumerate(region)) {
    const PlanarPoint q = map(p);
    rows.push_back({p.x, p.y, q.x, q.y});
  }
  return rows;
}

json plan_kh_json(const PlanKH& p) {
  return {{"mode", "kh"},          {"epsilon", p.eps},
          {"T", p.T},              {"S", p.S},
          {"R", p.R},              {"c", p.c},
          {"C_kh", p.C_kh},        {"C_prime", p.C_prime},
          {"target_outer", p.target_outer},
          {"inner_bookkeeping", p.inner_bookkeeping},
          {"in_domain", p.in_domain}};
}

json plan_family_json(const PlanFamily& p) {
  return {{"mode", "family"},
          {"epsilon", p.eps},
          {"S", p.S},
          {"R", p.R},
          {"domain_radius_1", p.domain_radius_1},
          {"domain_radius_2", p.domain_radius_2},
          {"target_radius_1", p.target_radius_1},
          {"target_radius_2", p.target_radius_2},
          {"in_domain", p.in_domain}};
}

std::vector<PlanarPoint> spiral_curve(const SpiralParams& params, int points_per_turn) {
  // The image of a horizontal mid-line is one continuous spiral curve.
  const double y = params.B / 2.0;
  const int turns = static_cast<int>(std::ceil(params.A / params.lambda));
  const int n = std::max(1000, turns * points_per_turn);
  const double margin = params.A * 1e-9;
  std::vector<PlanarPoint> curve;
  curve.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = margin + (params.A - 2.0 * margin) * i / (n - 1.0);
    curve.push_back(spiral_eval(params, {x, y}));
  }
  return curve;
}

std::vector<std::array<double, 4>> curve_rows(const SpiralParams& params,
                                              const std::vector<PlanarPoint>& curve) {
  std::vector<std::array<double, 4>> rows;
  rows.reserve(curve.size());
  const double y = params.B / 2.0;
  const double margin = params.A * 1e-9;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double x = margin + (params.A - 2.0 * margin) * i / (curve.size() - 1.0);
    rows.push_back({x, y, curve[i].x, curve[i].y});
  }
  return rows;
}

int run_figure(const std::string& name, const DoubleSpiralFlags& ds, const SpiralFlags& sp,
               const std::string& out, const std::string& points_out) {
  SvgFigure fig;
  json summary = {{"name", name}};
  std::vector<std::array<double, 4>> rows;

  if (name == "spiral") {
    const SpiralParams params = sp.params();
    const std::vector<PlanarPoint> curve = spiral_curve(params, 256);
    fig.add_polyline(curve, "#1f4e9c");
    for (double L : {params.A / 4.0, params.A / 2.0, params.A}) {
      fig.add_circle_outline(radius_bound(params, L), "#888888");
    }
    if (params.r > 0.0) fig.add_circle_outline(inner_avoid_radius(params), "#c03030");
    rows = curve_rows(params, curve);
    summary["outer_radius"] = radius_bound(params, params.A);
  } else if (name == "square-to-ball") {
    SpiralParams params{1.0, 1.0, 0.01, 0.0, 0.0, 0.0, +1};
    const std::vector<PlanarPoint> curve = spiral_curve(params, 256);
    const double outer = radius_bound(params, params.A);
    fig.add_polyline(curve, "#1f4e9c", 0.002);
    fig.add_circle_outline(outer, "#c03030", 0.003);
    rows = curve_rows(params, curve);
    summary["outer_radius"] = outer;
    summary["unit_area_radius"] = 1.0 / kSqrtPi;
  } else if (name == "double-spiral") {
    const DoubleSpiralConfig config = ds.config();
    const DomainModel model = config.domain();
    const RectRegion r1 = model.r1();
    const RectRegion r2 = model.r2();
    auto branch_curve = [&](const RectRegion& rect, auto eval) {
      const int n = std::max(2000, static_cast<int>(std::ceil(rect.width / config.lambda())) * 128);
      std::vector<PlanarPoint> curve;
      curve.reserve(n);
      const double margin = rect.width * 1e-9;
      for (int i = 0; i < n; ++i) {
        const PlanarPoint p{rect.anchor.x + margin + (rect.width - 2.0 * margin) * i / (n - 1.0),
                            rect.anchor.y + rect.height / 2.0};
        curve.push_back(eval(p));
        rows.push_back({p.x, p.y, curve.back().x, curve.back().y});
      }
      return curve;
    };
    fig.add_polyline(branch_curve(r2, [&](PlanarPoint p) { return beta2_eval(config, p); }),
                     "#1f4e9c", 0.002);
    fig.add_polyline(branch_curve(r1, [&](PlanarPoint p) { return beta1_eval(config, p); }),
                     "#2c8a4b", 0.002);
    fig.add_circle_outline(std::sqrt(config.M * config.eps / kPi), "#c03030", 0.003);
    fig.add_circle_outline(radius_bound(config.beta2_params(), config.a_tilde()), "#888888",
                           0.003);
    summary["inner_radius"] = std::sqrt(config.M * config.eps / kPi);
    summary["outer_radius"] = radius_bound(config.beta2_params(), config.a_tilde());
  } else if (name == "domain-model") {
    const DomainModel model = ds.config().domain();
    fig.add_rect_outline(model.r1(), "#2c8a4b");
    fig.add_rect_outline(model.r2(), "#1f4e9c");
    fig.add_rect_outline(model.w_rect(), "#c03030");
    fig.add_rect_outline(model.band(), "#222222");
    fig.add_rect_outline(model.strip().rect(), "#888888");
    for (const RectRegion& rect : {model.r1(), model.r2(), model.w_rect(), model.band()}) {
      rows.push_back({rect.anchor.x, rect.anchor.y, rect.width, rect.height});
    }
    summary["cover_width"] = model.cover_width();
    summary["cover_height"] = model.cover_height();
  } else {
    throw usage_error("unknown figure name: " + name);
  }

  if (!out.empty()) fig.write(out);
  if (!points_out.empty()) write_csv(points_out, rows);
  std::cout << summary.dump() << '\n';
  return kExitPass;
}

std::unique_ptr<Map2> make_map(const std::string& map_name, const SpiralFlags& sp,
                               const DoubleSpiralFlags& ds, RectRegion& region) {
  if (map_name == "spiral") {
    region = sp.params().domain();
    return std::make_unique<SpiralMap>(sp.params());
  }
  if (map_name == "f") {
    region = RectRegion::from_size(kSqrtPi, 2.0 * kSqrtPi);
    return std::make_unique<FMap>(ChainConfig{ds.eps, ds.A, ds.config().M});
  }
  if (map_name == "beta1") {
    region = ds.config().domain().r1();
    return std::make_unique<Beta1Map>(ds.config());
  }
  if (map_name == "beta2") {
    region = ds.config().domain().r2();
    return std::make_unique<Beta2Map>(ds.config());
  }
  if (map_name == "tuck") {
    region = ds.config().domain().w_rect();
    return std::make_unique<TuckMap>(ds.config());
  }
  if (map_name == "identity") {
    region = RectRegion::from_size(1.0, 1.0);
    return std::make_unique<PlanarMap>(PlanarMap::identity());
  }
  throw usage_error("unknown map: " + map_name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spiralemb: spiral symplectic embeddings, certification and figures"};
  app.require_subcommand(1);
  ConfigOverlay cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; keys mirror long flags");

  // --- spiral ---------------------------------------------------------------
  CLI::App* c_spiral = app.add_subcommand("spiral", "sample the simple spiral map to CSV");
  c_spiral->fallthrough();
  SpiralFlags sp_spiral;
  sp_spiral.add(c_spiral, cfg);
  int spiral_grid = 200;
  std::string spiral_out = "spiral.csv";
  cfg.bind(c_spiral->add_option("--grid", spiral_grid, "grid resolution per axis"), "grid",
           &spiral_grid);
  cfg.bind(c_spiral->add_option("--out", spiral_out, "output CSV path"), "out", &spiral_out);

  // --- double-spiral --------------------------------------------------------
  CLI::App* c_double = app.add_subcommand("double-spiral", "sample the glued two-spiral map");
  c_double->fallthrough();
  DoubleSpiralFlags ds_double;
  ds_double.add(c_double, cfg);
  int double_grid = 200;
  std::string double_out = "double_spiral.csv";
  cfg.bind(c_double->add_option("--grid", double_grid, "grid resolution per axis"), "grid",
           &double_grid);
  cfg.bind(c_double->add_option("--out", double_out, "output CSV path"), "out", &double_out);

  // --- flow -----------------------------------------------------------------
  CLI::App* c_flow = app.add_subcommand(
      "flow", "sample the time-1 flow: rows are (x1, x2, y1', y2') from y1=y2=0");
  c_flow->fallthrough();
  DoubleSpiralFlags ds_flow;
  ds_flow.add(c_flow, cfg);
  int flow_grid = 200;
  std::string flow_out = "flow.csv";
  cfg.bind(c_flow->add_option("--grid", flow_grid, "grid resolution per axis"), "grid",
           &flow_grid);
  cfg.bind(c_flow->add_option("--out", flow_out, "output CSV path"), "out", &flow_out);

  // --- chain-verify ---------------------------------------------------------
  CLI::App* c_chain = app.add_subcommand("chain-verify",
                                         "run the estimate chain over the sampled domain");
  c_chain->fallthrough();
  DoubleSpiralFlags ds_chain;
  ds_chain.add(c_chain, cfg);
  std::int64_t chain_samples = 1000000;
  std::uint64_t chain_seed = 20260823;
  int chain_band_res = 0, chain_square_res = 0;  // 0 -> sized from --samples
  std::string chain_out;
  c_chain->add_option("--band-res", chain_band_res, "band grid resolution (0 = auto)");
  c_chain->add_option("--square-res", chain_square_res, "square grid resolution (0 = auto)");
  c_chain->add_option("--samples", chain_samples, "minimum total sample count");
  c_chain->add_option("--seed", chain_seed, "seed for the random supplement");
  c_chain->add_option("--out", chain_out, "output JSON report path");

  // --- verify ---------------------------------------------------------------
  CLI::App* c_verify = app.add_subcommand("verify", "generic certification checks");
  c_verify->fallthrough();
  std::string verify_check = "symplectic";
  std::string verify_map = "spiral";
  SpiralFlags sp_verify;
  DoubleSpiralFlags ds_verify;
  sp_verify.add(c_verify, cfg);
  ds_verify.add(c_verify, cfg, "--strip-A");
  int verify_nx = 100, verify_ny = 100;
  std::int64_t verify_random = 0, verify_samples = 1000000;
  std::uint64_t verify_seed = 20260823;
  double verify_tol = 1e-10, verify_radius = 0.0, verify_image_tol = 1e-9,
         verify_domain_sep = -1.0;
  std::string verify_out;
  c_verify->add_option("--check", verify_check, "symplectic|injective|contained|avoids|area")
      ->check(CLI::IsMember({"symplectic", "injective", "contained", "avoids", "area"}));
  c_verify->add_option("--map", verify_map, "spiral|f|beta1|beta2|tuck|identity");
  c_verify->add_option("--nx", verify_nx, "grid resolution, x");
  c_verify->add_option("--ny", verify_ny, "grid resolution, y");
  c_verify->add_option("--random", verify_random, "random sample supplement");
  c_verify->add_option("--samples", verify_samples, "samples for --check area");
  c_verify->add_option("--seed", verify_seed, "seed");
  c_verify->add_option("--tol", verify_tol, "tolerance (symplectic/contained)");
  c_verify->add_option("--radius", verify_radius, "ball radius (contained/avoids)");
  c_verify->add_option("--image-tol", verify_image_tol, "injectivity image tolerance");
  c_verify->add_option("--domain-sep", verify_domain_sep,
                       "injectivity domain separation (default 3 grid steps)");
  c_verify->add_option("--out", verify_out, "output JSON report path");

  // --- plan -----------------------------------------------------------------
  CLI::App* c_plan = app.add_subcommand("plan", "parameter planners");
  c_plan->fallthrough();
  std::string plan_mode = "family";
  double plan_eps = 0.1, plan_t = 1.0;
  std::string plan_eps_list = "0.1,0.05,0.02,0.01";
  std::string plan_out;
  c_plan->add_option("--mode", plan_mode, "kh|family|nesting")
      ->check(CLI::IsMember({"kh", "family", "nesting"}));
  cfg.bind(c_plan->add_option("--epsilon", plan_eps, "construction parameter"), "epsilon",
           &plan_eps);
  cfg.bind(c_plan->add_option("--T", plan_t, "kh mode: T > 1/3"), "T", &plan_t);
  c_plan->add_option("--eps-list", plan_eps_list, "nesting mode: decreasing list");
  c_plan->add_option("--out", plan_out, "output JSON path");

  // --- figure ---------------------------------------------------------------
  CLI::App* c_figure = app.add_subcommand("figure", "emit SVG figures and point CSVs");
  c_figure->fallthrough();
  std::string figure_name = "spiral";
  SpiralFlags sp_figure;
  sp_figure.lambda = 0.05;
  DoubleSpiralFlags ds_figure;
  sp_figure.add(c_figure, cfg);
  ds_figure.add(c_figure, cfg, "--strip-A");
  std::string figure_out, figure_points;
  c_figure->add_option("--name", figure_name, "spiral|square-to-ball|double-spiral|domain-model")
      ->check(CLI::IsMember({"spiral", "square-to-ball", "double-spiral", "domain-model"}));
  c_figure->add_option("--out", figure_out, "output SVG path");
  c_figure->add_option("--points-out", figure_points, "output CSV path for the sampled points");

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) cfg.load(config_path);
    cfg.apply();

    if (c_spiral->parsed()) {
      const SpiralMap map(sp_spiral.params());
      write_csv(spiral_out, map_grid_rows(map, map.params().domain(), spiral_grid));
      return kExitPass;
    }

    if (c_double->parsed()) {
      const DoubleSpiralConfig config = ds_double.config();
      std::vector<std::array<double, 4>> rows;
      for (const DomainSample& s : sample_domain(config.domain(), double_grid)) {
        const PlanarPoint q = double_spiral_eval(config, s);
        rows.push_back({s.p.x, s.p.y, q.x, q.y});
      }
      write_csv(double_out, rows);
      return kExitPass;
    }

    if (c_flow->parsed()) {
      const DoubleSpiralConfig config = ds_flow.config();
      const CutoffProfile profile = CutoffProfile::build(config.A, config.eps);
      const RectRegion band = config.domain().band();
      std::vector<std::array<double, 4>> rows;
      for (int j = 0; j < flow_grid; ++j) {
        const double x2 = (j + 0.5) * kSqrtPi / flow_grid;
        for (int i = 0; i < flow_grid; ++i) {
          const double x1 = band.anchor.x + (i + 0.5) * band.width / flow_grid;
          const Point4 q = flow_time1(profile, {x1, 0.0, x2, 0.0});
          rows.push_back({x1, x2, q.y1, q.y2});
        }
      }
      write_csv(flow_out, rows);
      return kExitPass;
    }

    if (c_chain->parsed()) {
      const DoubleSpiralConfig dsc = ds_chain.config();
      const ChainConfig config{dsc.eps, dsc.A, dsc.M};
      // Size the deterministic grid to reach the requested sample count;
      // one sixth of the budget goes to the random supplement.
      const std::int64_t random = chain_samples / 6;
      const std::int64_t grid_budget = chain_samples - random;
      const int band_res =
          chain_band_res > 0
              ? chain_band_res
              : std::max(16, static_cast<int>(std::ceil(std::cbrt(grid_budget / 5.0))));
      const int square_res =
          chain_square_res > 0
              ? chain_square_res
              : std::max(8, static_cast<int>(std::ceil(std::sqrt(
                                double(grid_budget) / 5.0 / band_res))));
      const ChainSupResult r =
          verify_main_bound(config, band_res, square_res, random, chain_seed);
      json out = {{"sup_norm", r.sup},
                  {"bound", r.bound},
                  {"c", r.constants.c},
                  {"C", r.constants.C},
                  {"C_tilde", r.constants.C_tilde},
                  {"epsilon", config.eps},
                  {"A", config.A},
                  {"M", config.M},
                  {"samples", r.samples},
                  {"violations", r.violations},
                  {"seed", chain_seed},
                  {"passed", r.passed}};
      const std::string text = out.dump(2) + "\n";
      if (!chain_out.empty()) write_text(chain_out, text);
      std::cout << text;
      return r.passed ? kExitPass : kExitFail;
    }

    if (c_verify->parsed()) {
      RectRegion region = RectRegion::from_size(1.0, 1.0);
      const std::unique_ptr<Map2> map = make_map(verify_map, sp_verify, ds_verify, region);
      SampleGrid grid{verify_nx, verify_ny, verify_random, verify_seed};
      if (verify_check == "area") {
        const double est = estimate_area(*map, region, verify_samples, verify_seed);
        const double rel = std::fabs(est - region.area()) / region.area();
        json out = {{"check", "area"},      {"map_id", verify_map},
                    {"estimate", est},      {"domain_area", region.area()},
                    {"relative_error", rel}, {"samples", verify_samples},
                    {"seed", verify_seed},  {"pass", rel <= 0.02}};
        const std::string text = out.dump(2) + "\n";
        if (!verify_out.empty()) write_text(verify_out, text);
        std::cout << text;
        return rel <= 0.02 ? kExitPass : kExitFail;
      }
      VerificationReport report;
      if (verify_check == "symplectic") {
        report = check_symplectic(*map, region, grid, verify_tol, verify_map);
      } else if (verify_check == "injective") {
        const double sep = verify_domain_sep > 0.0
                               ? verify_domain_sep
                               : 3.0 * std::max(region.width / verify_nx,
                                                region.height / verify_ny);
        report = check_injective(*map, region, grid, verify_image_tol, sep, verify_map);
      } else if (verify_check == "contained") {
        if (!(verify_radius > 0.0)) throw usage_error("--radius required for contained");
        report = check_contained(*map, region, grid, BallRegion::open(verify_radius),
                                 verify_tol, verify_map);
      } else {  // avoids
        report = check_avoids(*map, region, grid, BallRegion::closed_ball(verify_radius),
                              verify_map);
      }
      const std::string text = report_to_json(report);
      if (!verify_out.empty()) write_text(verify_out, text);
      std::cout << text;
      return report.pass ? kExitPass : kExitFail;
    }

    if (c_plan->parsed()) {
      json out;
      bool pass = true;
      if (plan_mode == "kh") {
        out = plan_kh_json(plan_kh(plan_eps, plan_t));
      } else if (plan_mode == "family") {
        out = plan_family_json(plan_family(plan_eps));
      } else {
        std::vector<double> eps_list;
        std::stringstream ss(plan_eps_list);
        std::string item;
        while (std::getline(ss, item, ',')) eps_list.push_back(std::stod(item));
        const NestingReport r = check_nesting(eps_list);
        out = {{"mode", "nesting"},       {"eps_list", r.eps_list},
               {"nesting_ok", r.nesting_ok}, {"exhaustion_ok", r.exhaustion_ok},
               {"probe_witnesses", r.probe_witnesses}, {"pass", r.pass}};
        pass = r.pass;
      }
      const std::string text = out.dump(2) + "\n";
      if (!plan_out.empty()) write_text(plan_out, text);
      std::cout << text;
      return pass ? kExitPass : kExitFail;
    }

    if (c_figure->parsed()) {
      return run_figure(figure_name, ds_figure, sp_figure, figure_out, figure_points);
    }

    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const construction_error& e) {
    std::cerr << "construction error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
