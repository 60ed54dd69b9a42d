#include "spiralemb/torus_strip.hpp"

#include <algorithm>
#include <cmath>

namespace spiralemb {

namespace {

// 32-point Gauss-Legendre rule on [-1, 1], positive half; mirrored on use.
constexpr int kHalfNodes = 16;
constexpr double kGL32[kHalfNodes][2] = {
    {4.83076656877383104e-02, 9.65400885147278121e-02},
    {1.44471961582796488e-01, 9.56387200792748332e-02},
    {2.39287362252137065e-01, 9.38443990808045664e-02},
    {3.31868602282127667e-01, 9.11738786957638631e-02},
    {4.21351276130635333e-01, 8.76520930044039082e-02},
    {5.06899908932229359e-01, 8.33119242269468457e-02},
    {5.87715757240762304e-01, 7.81938957870703111e-02},
    {6.63044266930215231e-01, 7.23457941088484491e-02},
    {7.32182118740289711e-01, 6.58222227763617523e-02},
    {7.94483795967942386e-01, 5.86840934785357038e-02},
    {8.49367613732569970e-01, 5.09980592623762441e-02},
    {8.96321155766052202e-01, 4.28358980222264263e-02},
    {9.34906075937739667e-01, 3.42738629130216257e-02},
    {9.64762255587506390e-01, 2.53920653092624266e-02},
    {9.85611511545268382e-01, 1.62743947309059653e-02},
    {9.97263861849481570e-01, 7.01861000946929839e-03},
};

// Bump phi(t) = exp(-1/(1 - (t/w)^2)) on (-w, w), zero outside.
double bump(double t, double w) {
  const double s = t / w;
  const double one = 1.0 - s * s;
  if (!(one > 0.0)) return 0.0;
  return std::exp(-1.0 / one);
}

// Unnormalized integral of the bump over (lo, hi) by a composite Gauss rule.
// 8 panels across a full window keeps the quadrature at the roundoff floor,
// so masses of split intervals sum consistently.
double raw_bump_mass(double lo, double hi, double w, const double* nodes, const double* weights) {
  lo = std::max(lo, -w);
  hi = std::min(hi, w);
  if (!(hi > lo)) return 0.0;
  double acc = 0.0;
  const int panels = std::max(1, static_cast<int>(std::ceil(4.0 * (hi - lo) / w)));
  const double step = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * step;
    const double half = 0.5 * step;
    double panel = 0.0;
    for (int i = 0; i < 2 * kHalfNodes; ++i) {
      panel += weights[i] * bump(mid + half * nodes[i], w);
    }
    acc += panel * half;
  }
  return acc;
}

}  // namespace

CutoffProfile CutoffProfile::build(double A, double eps, double eps0) {
  if (!(eps > 0.0) || eps > eps0) {
    throw construction_error("build_cutoff: require 0 < eps <= eps0");
  }
  if (!(A >= 0.5)) {
    throw construction_error("build_cutoff: require A >= 1/2");
  }
  CutoffProfile c;
  c.A_ = A;
  c.eps_ = eps;
  c.a_ = eps * eps;
  c.bump_width_ = c.a_ / 4.0;
  c.plateau_edge_ = c.a_ + c.bump_width_;
  c.support_edge_ = A - c.a_ - c.bump_width_;
  if (!(c.support_edge_ > c.plateau_edge_)) {
    throw construction_error("build_cutoff: plateau and support margins overlap");
  }
  c.ramp_slope_ = 1.0 / (c.support_edge_ - c.plateau_edge_);
  if (c.ramp_slope_ > 1.0 / A + eps) {
    throw construction_error("build_cutoff: slope budget unsatisfiable");
  }

  for (int i = 0; i < kHalfNodes; ++i) {
    c.gl_nodes_[2 * i] = kGL32[i][0];
    c.gl_nodes_[2 * i + 1] = -kGL32[i][0];
    c.gl_weights_[2 * i] = kGL32[i][1];
    c.gl_weights_[2 * i + 1] = kGL32[i][1];
  }
  // Normalize by the full bump mass under the same rule, so chi is exactly 1
  // on the plateau and exactly 0 off the support.
  c.norm_ = raw_bump_mass(-c.bump_width_, c.bump_width_, c.bump_width_, c.gl_nodes_.data(),
                          c.gl_weights_.data());
  return c;
}

double CutoffProfile::bump_mass(double lo, double hi) const {
  const double w = bump_width_;
  if (lo <= -w && hi >= w) return 1.0;  // full window, exact by normalization
  return raw_bump_mass(lo, hi, w, gl_nodes_.data(), gl_weights_.data()) / norm_;
}

double CutoffProfile::base(double x) const {
  x = std::fabs(x);
  if (x <= plateau_edge_) return 1.0;
  if (x >= support_edge_) return 0.0;
  return (support_edge_ - x) * ramp_slope_;
}

double CutoffProfile::eval(double x, int order) const {
  if (order < 0 || order > 2) throw usage_error("cutoff_eval: order must be 0, 1 or 2");
  // Fast paths where the base profile is constant across the bump support.
  const double ax = std::fabs(x);
  if (ax <= a_) return order == 0 ? 1.0 : 0.0;
  if (ax >= A_ - a_) return 0.0;

  const double w = bump_width_;
  const double m = ramp_slope_;
  const double pe = plateau_edge_;
  const double se = support_edge_;
  // chi = (phi * base) / norm with base piecewise linear; base' is +m on
  // (-se, -pe), -m on (pe, se), zero elsewhere, and base'' carries point
  // masses +m, -m, -m, +m at -se, -pe, pe, se. Differentiating under the
  // convolution turns these directly into bump masses and bump values, so the
  // three orders are mutually consistent derivatives to quadrature precision.
  if (order == 1) {
    return m * (bump_mass(x + pe, x + se) - bump_mass(x - se, x - pe));
  }
  if (order == 2) {
    return m * (bump(x + se, w) - bump(x + pe, w) - bump(x - pe, w) + bump(x - se, w)) / norm_;
  }
  // Order 0: split the integration window at the kinks of the base profile so
  // each Gauss application sees a smooth integrand. Away from the kinks the
  // base is linear across the whole window and the even kernel reproduces it
  // exactly, so the convolution collapses to base(x).
  double cuts[6];
  int n = 0;
  cuts[n++] = -w;
  for (double bp : {-se, -pe, pe, se}) {
    const double t = x - bp;
    if (t > -w && t < w) cuts[n++] = t;
  }
  if (n == 1) return base(x);
  cuts[n++] = w;
  std::sort(cuts, cuts + n);
  double acc = 0.0;
  for (int piece = 0; piece + 1 < n; ++piece) {
    const double lo = cuts[piece];
    const double hi = cuts[piece + 1];
    if (!(hi > lo)) continue;
    const int panels = std::max(1, static_cast<int>(std::ceil(4.0 * (hi - lo) / w)));
    const double step = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = lo + (p + 0.5) * step;
      const double half = 0.5 * step;
      double panel = 0.0;
      for (int i = 0; i < 2 * kHalfNodes; ++i) {
        const double t = mid + half * gl_nodes_[i];
        panel += gl_weights_[i] * bump(t, w) * base(x - t);
      }
      acc += panel * half;
    }
  }
  return acc / norm_;
}

Point4 flow_time1(const CutoffProfile& profile, Point4 q) {
  if (!q.finite()) throw domain_error("flow_time1: state is not finite");
  const double chi = profile.eval(q.x1, 0);
  const double dchi = profile.eval(q.x1, 1);
  return {q.x1, q.y1 + dchi * q.x2 * kSqrtPi, q.x2, q.y2 + chi * kSqrtPi};
}

std::array<std::array<double, 4>, 4> flow_jacobian(const CutoffProfile& profile, Point4 q) {
  const double chi1 = profile.eval(q.x1, 1);
  const double chi2 = profile.eval(q.x1, 2);
  std::array<std::array<double, 4>, 4> j{};
  for (int i = 0; i < 4; ++i) j[i][i] = 1.0;
  j[1][0] = chi2 * q.x2 * kSqrtPi;
  j[1][2] = chi1 * kSqrtPi;
  j[3][0] = chi1 * kSqrtPi;
  return j;
}

RectRegion DomainModel::r2() const {
  const double a2 = central_half_width();
  return {cover_width(), cover_height(), {-a2, eps / 2.0 - cover_height()}, false};
}

RectRegion DomainModel::r1() const {
  // Image of R2 under rotation by pi about the origin (the midpoint of the
  // shared central strip).
  const double a2 = central_half_width();
  return {cover_width(), cover_height(), {a2 - cover_width(), -eps / 2.0}, false};
}

RectRegion DomainModel::w_rect() const {
  const double a2 = central_half_width();
  return {2.0 * a2, 2.0 * cover_height() - eps, {-a2, eps / 2.0 - cover_height()}, false};
}

RectRegion DomainModel::band() const {
  const double half = A + turn();
  return {2.0 * half, eps, {-half, -eps / 2.0}, false};
}

std::vector<RectRegion> DomainModel::strands() const {
  const RectRegion b = band();
  std::vector<RectRegion> out;
  const double h = eps / 2.0;
  out.push_back({b.width, h, {b.anchor.x, -eps / 2.0}, false});
  out.push_back({b.width, h, {b.anchor.x, 0.0}, false});
  return out;
}

std::vector<DomainSample> sample_domain(const DomainModel& model, int resolution) {
  if (resolution < 2) throw usage_error("sample_domain: resolution must be >= 2");
  const RectRegion b = model.band();
  const RectRegion r1 = model.r1();
  const RectRegion r2 = model.r2();
  const StripModel strip = model.strip();
  const double a2 = model.central_half_width();
  const double dx = b.width / resolution;
  const double dy = b.height / resolution;
  std::vector<DomainSample> out;
  out.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      DomainSample s;
      s.p = {b.anchor.x + (i + 0.5) * dx, b.anchor.y + (j + 0.5) * dy};
      s.in_r1 = r1.contains(s.p);
      s.in_r2 = r2.contains(s.p);
      s.in_strip = strip.contains(s.p);
      s.in_w = std::fabs(s.p.x) < a2;
      out.push_back(s);
    }
  }
  return out;
}

Point4 interleave_eval(const CutoffProfile& profile, const StripModel& strip,
                       PlanarPoint p1, PlanarPoint b) {
  if (!(b.x > 0.0 && b.x < kSqrtPi && b.y > 0.0 && b.y < kSqrtPi)) {
    throw domain_error("interleave_eval: b outside the open square Q(sqrt(pi))");
  }
  if (!p1.finite()) throw domain_error("interleave_eval: p1 is not finite");
  const Point4 q{p1.x, p1.y, b.x, b.y};
  return strip.contains(p1) ? flow_time1(profile, q) : q;
}

}  // namespace spiralemb
