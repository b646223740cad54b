#include <doctest.h>

#include <cmath>

#include "archifold/errors.hpp"
#include "archifold/facerules.hpp"
#include "archifold/tolerances.hpp"

using namespace archifold;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("division rules carry the expected exact tables") {
  DivisionRule tc = division_rule(ArchimedeanKind::truncated_cube, PlatonicKind::cube);
  REQUIRE(tc.edge_ratios.size() == 3);
  CHECK(tc.pattern == FacePattern::corner_cut);
  CHECK(tc.edge_ratios[0] == QuadExt::of(Rational(1), 2));
  CHECK(tc.edge_ratios[1] == QuadExt::sqrt_of(2));

  DivisionRule co = division_rule(ArchimedeanKind::cuboctahedron, PlatonicKind::cube);
  CHECK(co.pattern == FacePattern::midpoint);
  REQUIRE(co.edge_ratios.size() == 2);
  CHECK(co.edge_ratios[0] == co.edge_ratios[1]);
  CHECK(co.division_params() == std::vector<double>{0.5});

  DivisionRule tid =
      division_rule(ArchimedeanKind::truncated_icosidodecahedron, PlatonicKind::dodecahedron);
  CHECK(tid.pattern == FacePattern::inner_2polygon);
  REQUIRE(tid.edge_ratios.size() == 5);
  for (const auto& r : tid.edge_ratios) CHECK(r == QuadExt::of(Rational(1), 5));
}

TEST_CASE("every supported division rule is a palindrome with positive entries") {
  const std::pair<ArchimedeanKind, PlatonicKind> pairs[] = {
      {ArchimedeanKind::truncated_tetrahedron, PlatonicKind::tetrahedron},
      {ArchimedeanKind::truncated_cube, PlatonicKind::cube},
      {ArchimedeanKind::truncated_octahedron, PlatonicKind::octahedron},
      {ArchimedeanKind::truncated_icosahedron, PlatonicKind::icosahedron},
      {ArchimedeanKind::truncated_dodecahedron, PlatonicKind::dodecahedron},
      {ArchimedeanKind::cuboctahedron, PlatonicKind::cube},
      {ArchimedeanKind::cuboctahedron, PlatonicKind::octahedron},
      {ArchimedeanKind::icosidodecahedron, PlatonicKind::dodecahedron},
      {ArchimedeanKind::icosidodecahedron, PlatonicKind::icosahedron},
      {ArchimedeanKind::rhombicuboctahedron, PlatonicKind::cube},
      {ArchimedeanKind::rhombicuboctahedron, PlatonicKind::octahedron},
      {ArchimedeanKind::truncated_cuboctahedron, PlatonicKind::cube},
      {ArchimedeanKind::truncated_cuboctahedron, PlatonicKind::octahedron},
      {ArchimedeanKind::rhombicosidodecahedron, PlatonicKind::dodecahedron},
      {ArchimedeanKind::rhombicosidodecahedron, PlatonicKind::icosahedron},
      {ArchimedeanKind::truncated_icosidodecahedron, PlatonicKind::dodecahedron},
      {ArchimedeanKind::truncated_icosidodecahedron, PlatonicKind::icosahedron},
  };
  for (auto [solid, parent] : pairs) {
    DivisionRule r = division_rule(solid, parent);
    CHECK(r.is_palindrome());
    for (const auto& q : r.edge_ratios) CHECK(q.sign() > 0);
  }
}

TEST_CASE("unsupported pairs are rejected") {
  CHECK_THROWS_AS(division_rule(ArchimedeanKind::truncated_cube, PlatonicKind::octahedron),
                  UnsupportedPair);
  CHECK_THROWS_AS(division_rule(ArchimedeanKind::snub_cube, PlatonicKind::cube),
                  UnsupportedPair);
}

TEST_CASE("snub cube parameters") {
  SnubParams sp = snub_cube_params();
  CHECK(sp.x == doctest::Approx(0.3522011287389576).epsilon(1e-13));
  CHECK(sp.y == doctest::Approx(0.2281554936539618).epsilon(1e-13));
  CHECK(std::abs(sp.x - 0.352201129) < 1e-8);
  CHECK(std::abs(sp.y - 0.228155494) < 1e-8);
  CHECK(sp.x >= sp.y);
  CHECK(sp.residuals.at("cubic") < kRootTol);
  CHECK(sp.residuals.at("vertex_relation") < kRootTol);
  CHECK(sp.residuals.at("y_from_x") < kRootTol);
}

TEST_CASE("rational-root candidates are excluded exactly") {
  Poly<Rational> p({Rational(-1), Rational(4), Rational(-4), Rational(2)});
  for (Rational cand : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)})
    CHECK(!(p.eval(cand) == Rational(0)));
}

TEST_CASE("snub dodecahedron parameters") {
  SnubParams sp = snub_dodec_params();
  CHECK(sp.x == doctest::Approx(0.39446053810616728).epsilon(1e-12));
  CHECK(sp.y == doctest::Approx(0.26043394437699985).epsilon(1e-12));
  CHECK(std::abs(sp.x - 0.3944605378) < 1e-9);
  CHECK(std::abs(sp.y - 0.2604339436) < 1e-9);
  CHECK(sp.x >= sp.y);
  CHECK(sp.x > 0.0);
  CHECK(sp.x < 1.0);
  CHECK(sp.residuals.at("cubic") < kRootTol);
  for (const char* key : {"cubic", "triangle_eq_a", "triangle_eq_b", "y_from_x", "sextic"})
    CHECK(sp.residuals.at(key) < 1e-10);
}

TEST_CASE("exact cubic evaluates exactly in the quadratic field") {
  Poly<QuadExt> cubic = snub_dodec_cubic_exact();
  CHECK(cubic.eval(QuadExt::of(Rational(0), 5)) == QuadExt::golden());
  // at t = 1: (25phi-41) + (30-17phi) - 5 + phi = 9phi - 16
  CHECK(cubic.eval(QuadExt::of(Rational(1), 5)) ==
        QuadExt(Rational(-23, 2), Rational(9, 2), 5));
}

TEST_CASE("the degree-6 minimal polynomial has the exact coefficients") {
  Poly<Rational> p = snub_dodec_minimal_poly();
  REQUIRE(p.degree() == 6);
  CHECK(p[6] == Rational(1));
  CHECK(p[5] == Rational(-163, 31));
  CHECK(p[4] == Rational(386, 31));
  CHECK(p[3] == Rational(-306, 31));
  CHECK(p[2] == Rational(89, 31));
  CHECK(p[1] == Rational(-5, 31));
  CHECK(p[0] == Rational(-1, 31));
  CHECK(std::abs(to_double_poly(p).eval(snub_dodec_params().x)) < 1e-10);
}

TEST_CASE("gram inner product on the oblique pentagon basis") {
  FaceVec<QuadExt> op{QuadExt::of(Rational(1), 5), QuadExt::of(Rational(0), 5)};
  FaceVec<QuadExt> orr{QuadExt::of(Rational(0), 5), QuadExt::of(Rational(1), 5)};
  CHECK(gram_inner(op, op) == QuadExt::of(Rational(1), 5));
  CHECK(gram_inner(op, orr) == QuadExt(Rational(1, 4), Rational(-1, 4), 5));
  CHECK(gram_inner(op, orr).to_double() == doctest::Approx(-0.3090169943749474));

  // |OP + phi*OR|^2 = phi^2
  const QuadExt phi = QuadExt::golden();
  FaceVec<QuadExt> diag{QuadExt::of(Rational(1), 5), phi};
  CHECK(gram_inner(diag, diag) == phi * phi);
}

TEST_CASE("snub cube face square") {
  SnubParams sp = snub_cube_params();
  auto sq = snub_cube_face_square(sp);
  CHECK(sq[0].u == doctest::Approx(sp.x));
  CHECK(sq[0].v == doctest::Approx(sp.y));
  CHECK(sq[2].u == doctest::Approx(1.0 - sp.x));
  CHECK(sq[2].v == doctest::Approx(1.0 - sp.y));
  for (int i = 0; i < 4; ++i) {
    double side = dist(sq[i], sq[(i + 1) % 4]);
    CHECK(side == doctest::Approx(dist(sq[0], sq[1])).epsilon(1e-13));
  }
  // mirrored square swaps coordinates
  auto mir = snub_cube_face_square(sp, Chirality::left);
  CHECK(mir[0].u == doctest::Approx(sp.y));
  CHECK(mir[0].v == doctest::Approx(sp.x));
}

TEST_CASE("snub dodecahedron face pentagon") {
  SnubParams sp = snub_dodec_params();
  auto pent = snub_dodec_face_pentagon(sp);
  CHECK(pent[0].p == doctest::Approx(sp.x));
  CHECK(pent[0].r == doctest::Approx(sp.y));
  // second vertex matches the closed form (y, 1 - x - y + y*phi)
  CHECK(pent[1].p == doctest::Approx(sp.y).epsilon(1e-13));
  CHECK(pent[1].r == doctest::Approx(1.0 - sp.x - sp.y + sp.y * kPhi).epsilon(1e-13));

  // squared side from the gram metric matches the expanded polynomial
  FaceVec<double> d{pent[1].p - pent[0].p, pent[1].r - pent[0].r};
  double side2 = gram_inner(d, d);
  double x = sp.x, y = sp.y;
  double poly = (3.0 - kPhi) * x * x + (3.0 - kPhi) * y * y + (4.0 - 3.0 * kPhi) * x * y -
                (3.0 - kPhi) * x - (3.0 - kPhi) * y + 1.0;
  CHECK(side2 == doctest::Approx(poly).epsilon(1e-12));

  // pentagon regularity: all adjacent gram distances agree
  for (int i = 0; i < 5; ++i) {
    FaceVec<double> e{pent[(i + 1) % 5].p - pent[i].p, pent[(i + 1) % 5].r - pent[i].r};
    CHECK(std::abs(gram_inner(e, e) - side2) < 1e-10);
  }
}

TEST_CASE("equilateral residuals") {
  SnubParams sc = snub_cube_params();
  auto [r1, r2] = equilateral_residuals(ArchimedeanKind::snub_cube, sc);
  CHECK(r1 < kRootTol);
  CHECK(r2 < kRootTol);

  SnubParams off;
  off.x = 0.5;
  off.y = 0.5;
  auto [s1, s2] = equilateral_residuals(ArchimedeanKind::snub_cube, off);
  CHECK(s1 == doctest::Approx(0.5));  // |A1A2|^2 = 0, |A2B1|^2 = 1/2

  SnubParams sd = snub_dodec_params();
  auto [t1, t2] = equilateral_residuals(ArchimedeanKind::snub_dodecahedron, sd);
  CHECK(t1 < 1e-10);
  CHECK(t2 < 1e-10);

  CHECK_THROWS_AS(equilateral_residuals(ArchimedeanKind::cuboctahedron, sc), UnsupportedKind);
}

TEST_CASE("exact ratio identities all pass") {
  IdentityReport rep = verify_ratio_identities();
  CHECK(rep.items.size() >= 10);
  for (const auto& it : rep.items) {
    INFO(it.name);
    CHECK(it.pass);
  }
}
