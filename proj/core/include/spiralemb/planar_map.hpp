#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spiralemb/geometry.hpp"

namespace spiralemb {

/// Abstract planar transform, the unit the verifier operates on.
/// Implementations are immutable after construction and safe to evaluate
/// concurrently.
class Map2 {
 public:
  virtual ~Map2() = default;
  virtual PlanarPoint operator()(PlanarPoint p) const = 0;
  /// Closed-form Jacobian at p, if the map provides one.
  virtual std::optional<Mat2> jacobian(PlanarPoint p) const { return std::nullopt; }
};

enum class PieceKind { Scale, Translate, Shear, RotateTranslate };

/// One affine symplectic building block: p -> linear * p + offset.
struct AffinePiece {
  PieceKind kind;
  Mat2 linear;
  PlanarPoint offset;
};

/// Ordered composition of affine pieces, applied left to right.
class PlanarMap final : public Map2 {
 public:
  PlanarMap() = default;  // identity

  static PlanarMap identity() { return {}; }
  /// (x, y) -> (x / lambda, lambda * y).
  static PlanarMap scale(double lambda);
  static PlanarMap translate(double tx, double ty);
  /// Unit lower-triangular shear with subdiagonal s.
  static PlanarMap shear(double s);
  /// Rotation by -pi/2 about the origin followed by translation by (0, sqrt(pi)).
  static PlanarMap rotate_translate();

  static PlanarMap affine_piece(PieceKind kind, std::span<const double> params);
  static PlanarMap compose(std::span<const PlanarMap> maps);

  PlanarPoint apply(PlanarPoint p) const;
  PlanarPoint operator()(PlanarPoint p) const override { return apply(p); }
  std::optional<Mat2> jacobian(PlanarPoint p) const override;
  Mat2 jacobian_matrix(PlanarPoint p) const;

  const std::vector<AffinePiece>& pieces() const { return pieces_; }

 private:
  std::vector<AffinePiece> pieces_;
};

}  // namespace spiralemb
