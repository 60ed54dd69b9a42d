#include "spiralemb/planar_map.hpp"

namespace spiralemb {

PlanarMap PlanarMap::scale(double lambda) {
  if (!(lambda > 0.0)) throw usage_error("scale: lambda must be positive");
  PlanarMap m;
  m.pieces_.push_back({PieceKind::Scale, {1.0 / lambda, 0.0, 0.0, lambda}, {0.0, 0.0}});
  return m;
}

PlanarMap PlanarMap::translate(double tx, double ty) {
  PlanarMap m;
  m.pieces_.push_back({PieceKind::Translate, {}, {tx, ty}});
  return m;
}

PlanarMap PlanarMap::shear(double s) {
  PlanarMap m;
  m.pieces_.push_back({PieceKind::Shear, {1.0, 0.0, s, 1.0}, {0.0, 0.0}});
  return m;
}

PlanarMap PlanarMap::rotate_translate() {
  PlanarMap m;
  m.pieces_.push_back({PieceKind::RotateTranslate, {0.0, 1.0, -1.0, 0.0}, {0.0, kSqrtPi}});
  return m;
}

PlanarMap PlanarMap::affine_piece(PieceKind kind, std::span<const double> params) {
  switch (kind) {
    case PieceKind::Scale:
      if (params.size() != 1) throw usage_error("scale takes one parameter");
      return scale(params[0]);
    case PieceKind::Translate:
      if (params.size() != 2) throw usage_error("translate takes two parameters");
      return translate(params[0], params[1]);
    case PieceKind::Shear:
      if (params.size() != 1) throw usage_error("shear takes one parameter");
      return shear(params[0]);
    case PieceKind::RotateTranslate:
      if (!params.empty()) throw usage_error("rotate_translate takes no parameters");
      return rotate_translate();
  }
  throw usage_error("unknown affine piece kind");
}

PlanarMap PlanarMap::compose(std::span<const PlanarMap> maps) {
  if (maps.empty()) throw usage_error("compose: empty map list");
  PlanarMap out;
  for (const PlanarMap& m : maps) {
    out.pieces_.insert(out.pieces_.end(), m.pieces_.begin(), m.pieces_.end());
  }
  return out;
}

PlanarPoint PlanarMap::apply(PlanarPoint p) const {
  if (!p.finite()) throw domain_error("apply: point is not finite");
  for (const AffinePiece& piece : pieces_) {
    p = piece.linear.apply(p) + piece.offset;
  }
  return p;
}

Mat2 PlanarMap::jacobian_matrix(PlanarPoint) const {
  Mat2 j;  // identity
  for (const AffinePiece& piece : pieces_) {
    j = piece.linear * j;
  }
  return j;
}

std::optional<Mat2> PlanarMap::jacobian(PlanarPoint p) const { return jacobian_matrix(p); }

}  // namespace spiralemb
