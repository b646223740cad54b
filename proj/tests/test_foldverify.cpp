#include <doctest.h>

#include <cmath>

#include "archifold/facerules.hpp"
#include "archifold/foldverify.hpp"
#include "archifold/tolerances.hpp"

using namespace archifold;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

QuadExt phi_frac(int num_phi, int num_c) {
  // (num_phi * phi + num_c) / 31
  Rational k(num_phi, 31);
  return QuadExt(k / Rational(2) + Rational(num_c, 31), k / Rational(2), 5);
}
}  // namespace

TEST_CASE("square fold trace reproduces the placement parameters") {
  FoldTrace t = snub_cube_fold_trace();
  CHECK(t.passed());
  SnubParams sp = snub_cube_params();

  REQUIRE(t.images.size() == 3);
  const Point2 p_img = t.images[0], q_img = t.images[1], a1 = t.images[2];
  CHECK(p_img.u == doctest::Approx(1.0 - sp.x).epsilon(1e-10));
  CHECK(p_img.v == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q_img.u == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(q_img.v == doctest::Approx(1.0 - sp.y).epsilon(1e-10));
  CHECK(a1.u == doctest::Approx(1.0 - sp.x).epsilon(1e-10));
  CHECK(a1.v == doctest::Approx(1.0 - sp.y).epsilon(1e-10));

  REQUIRE(t.crease.slope_intercept.has_value());
  auto [b, c] = *t.crease.slope_intercept;
  CHECK(std::abs(c - (sp.x - 1.0)) < 1e-10);
  CHECK(std::abs(2.0 * b - (1.0 + c * c)) < kRootTol);
  CHECK(std::abs(b - (1.0 + c * c) / 2.0) < 1e-10);
}

TEST_CASE("fold target points carry exact denominators of 31") {
  auto targets = g_points_and_lines();
  CHECK(targets[0].point.p == phi_frac(37, 15));
  CHECK(targets[0].point.r == phi_frac(22, 24));
  CHECK(targets[4].point.p == phi_frac(49, 14));
  CHECK(targets[4].point.r == phi_frac(26, 34));
}

TEST_CASE("fourth target line sits at its exact distance from the corner") {
  auto targets = g_points_and_lines();
  // the perpendicular foot of line 4 lies at gram distance 39*phi/31 + 20/31
  // from the pentagon corner, along the direction of the long diagonal
  const QuadExt delta = phi_frac(39, 20);
  // recover the foot as the exact intersection with the diagonal's line
  const QuadExt zero = QuadExt::of(Rational(0), 5);
  const QuadExt one = QuadExt::of(Rational(1), 5);
  const QuadExt phi = QuadExt::golden();
  // diagonal from the corner through (1, phi): affine line phi*p - r = 0
  ExactLine2 diag{phi, -one, zero};
  auto foot = exact_intersection(diag, targets[3].line_oblique);
  REQUIRE(foot.has_value());
  FaceVec<QuadExt> fv{foot->first, foot->second};
  CHECK(gram_inner(fv, fv) == delta * delta);
}

TEST_CASE("target points form an exactly regular pentagon") {
  CHECK(g_points_form_regular_pentagon());
  // the 72-degree rotation about the exact centroid sends point 1 to point 2
  auto targets = g_points_and_lines();
  const QuadExt five = QuadExt::of(Rational(5), 5);
  FaceVec<QuadExt> c{QuadExt::of(Rational(0), 5), QuadExt::of(Rational(0), 5)};
  for (const auto& t : targets) {
    c.p = c.p + t.point.p;
    c.r = c.r + t.point.r;
  }
  c = {c.p / five, c.r / five};
  FaceVec<QuadExt> rel{targets[0].point.p - c.p, targets[0].point.r - c.r};
  FaceVec<QuadExt> rot = pentagon_rotate_linear(rel);
  CHECK(rot.p + c.p == targets[1].point.p);
  CHECK(rot.r + c.r == targets[1].point.r);
}

TEST_CASE("crease through X and Y") {
  SnubParams sp = snub_dodec_params();
  Crease f = snub_dodec_crease();
  Point2 X = pentagon_to_cart(FaceVec<double>{sp.x, 0.0});
  Point2 Y = pentagon_to_cart(FaceVec<double>{sp.y / kPhi, sp.y});
  CHECK(X.norm() == doctest::Approx(sp.x).epsilon(1e-12));
  CHECK(Y.norm() == doctest::Approx(sp.y).epsilon(1e-12));
  CHECK(f.line.dist(X) < kRootTol);
  CHECK(f.line.dist(Y) < kRootTol);
}

TEST_CASE("pentagon fold verification") {
  FoldTrace t = verify_dodec_fold();
  CHECK(t.passed());
  for (int i = 1; i <= 5; ++i) {
    const auto* c = t.find("image-" + std::to_string(i) + "-on-line");
    REQUIRE(c != nullptr);
    CHECK(c->value < kGeomTol);
  }
  const auto* conc = t.find("lines-concurrent");
  REQUIRE(conc != nullptr);
  CHECK(conc->value == 0.0);
  const auto* sep = t.find("common-point-misses-last-image");
  REQUIRE(sep != nullptr);
  CHECK(sep->value > 1e-6);
  CHECK(sep->value == doctest::Approx(0.00183496762).epsilon(1e-5));
  const auto* pairs = t.find("pairwise-rederivation");
  REQUIRE(pairs != nullptr);
  CHECK(pairs->value < 1e-8);
}

TEST_CASE("final fold places Y onto the face vertex") {
  FoldTrace t = final_fold_to_A1();
  CHECK(t.passed());
  SnubParams sp = snub_dodec_params();
  REQUIRE(t.images.size() == 2);
  CHECK(t.images[0].norm() < kRootTol);
  Point2 a1 = pentagon_to_cart(FaceVec<double>{sp.x, sp.y});
  CHECK(dist(t.images[1], a1) < kGeomTol);
  // |OA1|^2 in closed form
  double g = gram_inner(FaceVec<double>{sp.x, sp.y}, FaceVec<double>{sp.x, sp.y});
  CHECK(g == doctest::Approx(sp.x * sp.x + sp.y * sp.y - sp.x * sp.y / kPhi).epsilon(1e-13));
}
