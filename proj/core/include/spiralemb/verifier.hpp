#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spiralemb/geometry.hpp"
#include "spiralemb/planar_map.hpp"

namespace spiralemb {

/// Deterministic sample enumeration: interior-offset grid (offset = step/2,
/// row-major), then an optional seeded uniform supplement.
struct SampleGrid {
  int nx = 100;
  int ny = 100;
  std::int64_t random_count = 0;
  std::uint64_t seed = 0;

  std::int64_t total() const { return static_cast<std::int64_t>(nx) * ny + random_count; }
  std::vector<PlanarPoint> enumerate(const RectRegion& region) const;
};

struct Violation {
  std::int64_t index = -1;
  PlanarPoint where;
  double slack = 0.0;
};

struct VerificationReport {
  std::string check;
  std::string map_id;
  std::map<std::string, double> params;
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  std::optional<Violation> worst;  // smallest violating sample index
  std::map<std::string, double> extrema;
  bool pass = false;
  double wall_time_s = 0.0;
  std::string rng_algorithm = "mt19937_64";
  std::uint64_t seed = 0;
};

/// |det J - 1| <= tol at every sample; analytic Jacobian when the map has one,
/// else central finite differences with step 1e-5.
VerificationReport check_symplectic(const Map2& map, const RectRegion& region,
                                    const SampleGrid& grid, double tol,
                                    const std::string& map_id = "map");

/// Spatial-hash near-collision scan: flags image pairs closer than image_tol
/// whose domain points are farther apart than domain_sep.
VerificationReport check_injective(const Map2& map, const RectRegion& region,
                                   const SampleGrid& grid, double image_tol,
                                   double domain_sep, const std::string& map_id = "map");

VerificationReport check_contained(const Map2& map, const RectRegion& region,
                                   const SampleGrid& grid, const BallRegion& ball,
                                   double tol, const std::string& map_id = "map");

/// Violation when |image|^2 <= radius^2 (the ball must be flagged closed).
VerificationReport check_avoids(const Map2& map, const RectRegion& region,
                                const SampleGrid& grid, const BallRegion& closed_ball,
                                const std::string& map_id = "map");

/// Monte-Carlo image area via an occupancy grid at scale
/// sqrt(area(region)/samples). The domain sampling density adapts to the
/// map's stretch so image points cannot skip occupancy cells.
double estimate_area(const Map2& map, const RectRegion& region, std::int64_t samples,
                     std::uint64_t seed);

/// Finite-difference Jacobian, central differences.
Mat2 fd_jacobian(const Map2& map, PlanarPoint p, double step = 1e-5);

}  // namespace spiralemb
