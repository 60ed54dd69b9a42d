#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <spiralemb/planar_map.hpp>

using namespace spiralemb;

TEST_CASE("identity fixes points and has unit jacobian") {
  const PlanarMap id = PlanarMap::identity();
  const PlanarPoint p{0.3, -1.7};
  const PlanarPoint q = id.apply(p);
  CHECK(q.x == p.x);
  CHECK(q.y == p.y);
  CHECK(id.jacobian_matrix(p).det() == 1.0);
}

TEST_CASE("scale squeezes x and stretches y, area preserved") {
  const PlanarMap m = PlanarMap::scale(4.0);
  const PlanarPoint q = m.apply({2.0, 3.0});
  CHECK(q.x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q.y == doctest::Approx(12.0).epsilon(1e-15));
  CHECK(m.jacobian_matrix({0, 0}).det() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(PlanarMap::scale(0.0), usage_error);
  CHECK_THROWS_AS(PlanarMap::scale(-2.0), usage_error);
}

TEST_CASE("shear and translate are symplectic") {
  for (const PlanarMap& m : {PlanarMap::shear(2.5), PlanarMap::translate(1.0, -2.0)}) {
    CHECK(m.jacobian_matrix({0.1, 0.2}).det() == doctest::Approx(1.0).epsilon(1e-15));
  }
  const PlanarPoint q = PlanarMap::shear(2.0).apply({1.0, 1.0});
  CHECK(q.x == 1.0);
  CHECK(q.y == 3.0);
}

TEST_CASE("rotate_translate maps (x, y) to (y, sqrt(pi) - x)") {
  const PlanarMap m = PlanarMap::rotate_translate();
  const PlanarPoint q = m.apply({0.25, 0.75});
  CHECK(q.x == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(q.y == doctest::Approx(kSqrtPi - 0.25).epsilon(1e-15));
  CHECK(m.jacobian_matrix({0, 0}).det() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("compose applies maps left to right") {
  const std::array<PlanarMap, 2> maps = {PlanarMap::scale(2.0), PlanarMap::translate(1.0, 0.0)};
  const PlanarMap m = PlanarMap::compose(maps);
  const PlanarPoint q = m.apply({2.0, 3.0});
  // scale first: (1, 6); then translate: (2, 6).
  CHECK(q.x == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(q.y == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(m.jacobian_matrix({0, 0}).det() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("compose of empty list is a usage error") {
  const std::vector<PlanarMap> empty;
  CHECK_THROWS_AS(PlanarMap::compose(empty), usage_error);
}

TEST_CASE("affine_piece validates parameter counts") {
  const double one[] = {2.0};
  const double two[] = {1.0, 2.0};
  CHECK_NOTHROW(PlanarMap::affine_piece(PieceKind::Scale, one));
  CHECK_NOTHROW(PlanarMap::affine_piece(PieceKind::Translate, two));
  CHECK_NOTHROW(PlanarMap::affine_piece(PieceKind::Shear, one));
  CHECK_NOTHROW(PlanarMap::affine_piece(PieceKind::RotateTranslate, {}));
  CHECK_THROWS_AS(PlanarMap::affine_piece(PieceKind::Scale, two), usage_error);
  CHECK_THROWS_AS(PlanarMap::affine_piece(PieceKind::Translate, one), usage_error);
  CHECK_THROWS_AS(PlanarMap::affine_piece(PieceKind::RotateTranslate, one), usage_error);
}

TEST_CASE("apply rejects non-finite points") {
  const PlanarMap id = PlanarMap::identity();
  CHECK_THROWS_AS(id.apply({std::numeric_limits<double>::infinity(), 0.0}), domain_error);
  CHECK_THROWS_AS(id.apply({0.0, std::numeric_limits<double>::quiet_NaN()}), domain_error);
}

TEST_CASE("jacobian of a composite is the product of the pieces") {
  const std::array<PlanarMap, 3> maps = {PlanarMap::shear(1.5), PlanarMap::scale(3.0),
                                         PlanarMap::rotate_translate()};
  const PlanarMap m = PlanarMap::compose(maps);
  const Mat2 j = m.jacobian_matrix({0.4, 0.6});
  CHECK(j.det() == doctest::Approx(1.0).epsilon(1e-14));
  // Finite difference agreement.
  const double h = 1e-6;
  const PlanarPoint p{0.4, 0.6};
  const PlanarPoint dx = m.apply({p.x + h, p.y}) - m.apply({p.x - h, p.y});
  const PlanarPoint dy = m.apply({p.x, p.y + h}) - m.apply({p.x, p.y - h});
  CHECK(dx.x / (2 * h) == doctest::Approx(j.a).epsilon(1e-8));
  CHECK(dx.y / (2 * h) == doctest::Approx(j.c).epsilon(1e-8));
  CHECK(dy.x / (2 * h) == doctest::Approx(j.b).epsilon(1e-8));
  CHECK(dy.y / (2 * h) == doctest::Approx(j.d).epsilon(1e-8));
}
