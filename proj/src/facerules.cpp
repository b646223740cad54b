#include "archifold/facerules.hpp"

#include <cmath>

#include "archifold/cubic.hpp"
#include "archifold/errors.hpp"
#include "archifold/tolerances.hpp"

namespace archifold {

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

QuadExt q2(int a, int b = 0) { return QuadExt(Rational(a), Rational(b), 2); }  // a + b*sqrt2
QuadExt q5r(Rational a) { return QuadExt::of(std::move(a), 5); }
QuadExt phi_times(int k, Rational add = 0) {
  // k*phi + add in Q(sqrt 5)
  return QuadExt(Rational(k, 2) + add, Rational(k, 2), 5);
}

std::vector<QuadExt> ones(int n, int disc) {
  return std::vector<QuadExt>(n, QuadExt::of(Rational(1), disc));
}

}  // namespace

std::vector<double> DivisionRule::division_params() const {
  double total = 0.0;
  for (const auto& r : edge_ratios) total += r.to_double();
  std::vector<double> out;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < edge_ratios.size(); ++i) {
    acc += edge_ratios[i].to_double();
    out.push_back(acc / total);
  }
  return out;
}

bool DivisionRule::is_palindrome() const {
  std::size_t n = edge_ratios.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (!(edge_ratios[i] == edge_ratios[n - 1 - i])) return false;
  return true;
}

DivisionRule division_rule(ArchimedeanKind solid, PlatonicKind parent) {
  using A = ArchimedeanKind;
  using P = PlatonicKind;
  const QuadExt s2 = QuadExt::sqrt_of(2);
  const QuadExt one2 = q2(1);
  const QuadExt phi = QuadExt::golden();
  const QuadExt one5 = q5r(1);

  auto rule = [&](std::vector<QuadExt> ratios, FacePattern pat) {
    return DivisionRule{solid, parent, std::move(ratios), pat};
  };

  switch (solid) {
    case A::truncated_tetrahedron:
      if (parent == P::tetrahedron) return rule(ones(3, 2), FacePattern::corner_cut);
      break;
    case A::truncated_cube:
      if (parent == P::cube) return rule({one2, s2, one2}, FacePattern::corner_cut);
      break;
    case A::truncated_octahedron:
      if (parent == P::octahedron) return rule(ones(3, 2), FacePattern::corner_cut);
      break;
    case A::truncated_icosahedron:
      if (parent == P::icosahedron) return rule(ones(3, 5), FacePattern::corner_cut);
      break;
    case A::truncated_dodecahedron:
      if (parent == P::dodecahedron) return rule({one5, phi, one5}, FacePattern::corner_cut);
      break;
    case A::cuboctahedron:
      if (parent == P::cube || parent == P::octahedron) return rule(ones(2, 2), FacePattern::midpoint);
      break;
    case A::icosidodecahedron:
      if (parent == P::dodecahedron || parent == P::icosahedron)
        return rule(ones(2, 5), FacePattern::midpoint);
      break;
    case A::rhombicuboctahedron:
      if (parent == P::cube) return rule({one2, s2, one2}, FacePattern::inner_polygon);
      if (parent == P::octahedron) return rule({one2, s2 + one2, one2}, FacePattern::inner_polygon);
      break;
    case A::truncated_cuboctahedron:
      if (parent == P::cube)
        return rule({one2, one2, s2, one2, one2}, FacePattern::inner_2polygon);
      if (parent == P::octahedron)
        return rule({one2, s2 + one2, s2 - one2, s2 + one2, one2}, FacePattern::inner_2polygon);
      break;
    case A::rhombicosidodecahedron:
      if (parent == P::dodecahedron) return rule(ones(3, 5), FacePattern::inner_polygon);
      if (parent == P::icosahedron)
        return rule({one5, phi + one5, one5}, FacePattern::inner_polygon);
      break;
    case A::truncated_icosidodecahedron:
      if (parent == P::dodecahedron) return rule(ones(5, 5), FacePattern::inner_2polygon);
      if (parent == P::icosahedron)
        return rule({one5, phi + one5, phi - one5, phi + one5, one5}, FacePattern::inner_2polygon);
      break;
    default:
      break;
  }
  throw UnsupportedPair("no face construction for " + name_of(solid) + " on " + name_of(parent));
}

SnubParams snub_cube_params() {
  SnubParams sp;
  sp.cubic = Poly<double>({-1.0, 4.0, -4.0, 2.0});
  CubicRoots roots = solve_cubic(sp.cubic);
  const double x = roots.roots.front().value;
  const double y = x - x * x;
  sp.x = x;
  sp.y = y;
  sp.residuals["cubic"] = std::abs(sp.cubic.eval(x));
  sp.residuals["vertex_relation"] = std::abs(1.0 - 2.0 * x - 2.0 * y + 2.0 * x * y);
  sp.residuals["y_from_x"] = std::abs(y - (x - x * x));
  return sp;
}

Poly<QuadExt> snub_dodec_cubic_exact() {
  // (25*phi - 41) x^3 + (30 - 17*phi) x^2 - 5 x + phi
  return Poly<QuadExt>({QuadExt::golden(), q5r(-5), phi_times(-17, 30), phi_times(25, -41)});
}

Poly<Rational> snub_dodec_minimal_poly() {
  Poly<QuadExt> cubic = snub_dodec_cubic_exact();
  std::vector<QuadExt> conj_coeffs;
  for (const auto& c : cubic.coeffs()) conj_coeffs.push_back(c.conj());
  Poly<QuadExt> product = cubic * Poly<QuadExt>(std::move(conj_coeffs));
  std::vector<Rational> out;
  for (const auto& c : product.coeffs()) {
    QuadExt scaled = c / Rational(31);
    if (!scaled.is_rational())
      throw VerificationFailed("conjugate product has an irrational coefficient");
    out.push_back(scaled.a());
  }
  return Poly<Rational>(std::move(out));
}

SnubParams snub_dodec_params() {
  SnubParams sp;
  sp.cubic = to_double_poly(snub_dodec_cubic_exact());
  CubicRoots roots = solve_cubic(sp.cubic);
  double x = -1.0;
  int in_range = 0;
  for (const auto& r : roots.roots)
    if (r.value > 0.0 && r.value < 1.0) {
      x = r.value;
      ++in_range;
    }
  if (in_range != 1)
    throw VerificationFailed("expected exactly one cubic root in (0,1)");
  // y as the rational expression of x eliminating the second equation
  const double y = ((4.0 - 2.0 * kPhi) * x * x + (kPhi - 5.0) * x + 1.0) /
                   ((4.0 * kPhi - 7.0) * x + 1.0 - kPhi);
  sp.x = x;
  sp.y = y;
  sp.residuals["cubic"] = std::abs(sp.cubic.eval(x));
  sp.residuals["triangle_eq_a"] =
      std::abs(y * y - (-kPhi * x * x + kPhi * x - kPhi * y + x * y));
  sp.residuals["triangle_eq_b"] =
      std::abs((kPhi - 2.0) * y * y - ((3.0 - kPhi) * x * x - 4.0 * x + 1.0 +
                                       (5.0 - 3.0 * kPhi) * x * y + 2.0 * (kPhi - 1.0) * y));
  sp.residuals["y_from_x"] =
      std::abs(y * ((4.0 * kPhi - 7.0) * x + 1.0 - kPhi) -
               ((4.0 - 2.0 * kPhi) * x * x + (kPhi - 5.0) * x + 1.0));
  sp.residuals["sextic"] = std::abs(to_double_poly(snub_dodec_minimal_poly()).eval(x));
  return sp;
}

double gram_inner(const FaceVec<double>& u, const FaceVec<double>& v) {
  const double c108 = (1.0 - std::sqrt(5.0)) / 4.0;  // == -1/(2*phi)
  return u.p * v.p + u.r * v.r + (u.p * v.r + u.r * v.p) * c108;
}

QuadExt gram_inner(const FaceVec<QuadExt>& u, const FaceVec<QuadExt>& v) {
  const QuadExt c108(Rational(1, 4), Rational(-1, 4), 5);
  return u.p * v.p + u.r * v.r + (u.p * v.r + u.r * v.p) * c108;
}

FaceVec<double> pentagon_rotate(const FaceVec<double>& w) {
  return {w.r, 1.0 - w.p + w.r * (kPhi - 1.0)};
}

FaceVec<QuadExt> pentagon_rotate(const FaceVec<QuadExt>& w) {
  FaceVec<QuadExt> lin = pentagon_rotate_linear(w);
  return {lin.p, lin.r + Rational(1)};
}

FaceVec<QuadExt> pentagon_rotate_linear(const FaceVec<QuadExt>& w) {
  const QuadExt phi_minus_1(Rational(-1, 2), Rational(1, 2), 5);
  return {w.r, -w.p + w.r * phi_minus_1};
}

std::array<Point2, 4> snub_cube_face_square(const SnubParams& params, Chirality chirality) {
  const double x = params.x, y = params.y;
  std::array<Point2, 4> sq = {Point2{x, y}, Point2{1.0 - y, x}, Point2{1.0 - x, 1.0 - y},
                              Point2{y, 1.0 - x}};
  if (chirality == Chirality::left)
    for (auto& p : sq) std::swap(p.u, p.v);
  return sq;
}

std::array<FaceVec<double>, 5> snub_dodec_face_pentagon(const SnubParams& params,
                                                        Chirality chirality) {
  std::array<FaceVec<double>, 5> out;
  out[0] = chirality == Chirality::right ? FaceVec<double>{params.x, params.y}
                                         : FaceVec<double>{params.y, params.x};
  for (int i = 1; i < 5; ++i) out[i] = pentagon_rotate(out[i - 1]);
  return out;
}

std::pair<double, double> equilateral_residuals(ArchimedeanKind solid, const SnubParams& params) {
  const double x = params.x, y = params.y;
  double d12, d1b, db2;
  if (solid == ArchimedeanKind::snub_cube) {
    d12 = (x - y) * (x - y) + (1.0 - x - y) * (1.0 - x - y);
    d1b = (x - y) * (x - y) + x * x + y * y;
    db2 = (1.0 - 2.0 * x) * (1.0 - 2.0 * x) + 2.0 * y * y;
  } else if (solid == ArchimedeanKind::snub_dodecahedron) {
    d12 = (3.0 - kPhi) * x * x + (3.0 - kPhi) * y * y + (4.0 - 3.0 * kPhi) * x * y -
          (3.0 - kPhi) * x - (3.0 - kPhi) * y + 1.0;
    d1b = (1.0 + kPhi) * (x * x + y * y - x * y);
    db2 = 4.0 * x * x + 3.0 * y * y + 4.0 * (1.0 - kPhi) * x * y - 4.0 * x +
          2.0 * (kPhi - 1.0) * y + 1.0;
  } else {
    throw UnsupportedKind("equilateral residuals exist only for snub solids");
  }
  return {std::abs(d12 - db2), std::abs(d1b - db2)};
}

IdentityReport verify_ratio_identities() {
  IdentityReport rep;
  auto item = [&](std::string name, bool pass) { rep.items.push_back({std::move(name), pass}); };

  // the middle hexagon of an a:b:c:b:a split is regular iff its two side
  // lengths agree: b+c = 2(b-a), which rearranges to c = b-2a
  auto hexagon_equiv = [&item](const std::string& field, const QuadExt& a, const QuadExt& b) {
    const QuadExt good = b - a - a;
    const QuadExt bad = good + a;
    item("hexagon-equivalence holds at c = b-2a (" + field + ")",
         good + b == (b - a) * Rational(2));
    item("hexagon-equivalence fails off c = b-2a (" + field + ")",
         !(bad + b == (b - a) * Rational(2)));
  };

  // Q(sqrt 2): triangle face split a : b : a with b = (sqrt2 + 1) a.
  {
    const QuadExt a = q2(1), b = q2(1, 1);
    item("octagon-ratio: (b-a)/a = sqrt2", (b - a) / a == QuadExt::sqrt_of(2));
    const QuadExt c = b - a - a;
    item("five-part: c = (sqrt2-1) a", c == q2(-1, 1) * a);
    hexagon_equiv("sqrt2", a, b);
  }
  // Q(sqrt 5): triangle face split with b = (phi + 1) a.
  {
    const QuadExt phi = QuadExt::golden();
    const QuadExt a = q5r(1), b = phi + Rational(1);
    item("decagon-ratio: (b-a)/a = phi", (b - a) / a == phi);
    const QuadExt c = b - a - a;
    item("five-part: c = (phi-1) a", c == (phi - Rational(1)) * a);
    hexagon_equiv("phi", a, b);
  }
  // Pentagon face split 1:1:1. With |BB'| = 1: |A'B'| = (2+phi)|BB'|,
  // rhombus sides give |A''B''| = |A'B'| - 2|BB'| = phi, |QR| = 2 phi.
  {
    const QuadExt phi = QuadExt::golden();
    const QuadExt bb = q5r(1);
    const QuadExt apbp = (Rational(2) + phi) * bb;
    const QuadExt apbpp = apbp - bb * Rational(2);
    item("pentagon thirds: inner segment = phi |BB'|", apbpp == phi * bb);
    const QuadExt qr = phi * (bb * Rational(2));
    item("pentagon thirds: |QR| = 2 phi |BB'|", qr == phi * bb * Rational(2));
    item("pentagon thirds: triangle edge |QR|/2 matches", qr / Rational(2) == apbpp);
  }
  // Pentagon face split a:b:c:b:a. Hexagon regular iff b+c = 2a, decagon
  // regular iff a = c; the two together force a = b = c.
  {
    const QuadExt phi = QuadExt::golden();
    const QuadExt a = q5r(1);
    const QuadExt c = a;                       // decagon condition a = c
    const QuadExt b = a * Rational(2) - c;     // hexagon condition b + c = 2a
    item("pentagon fifths: a = b = c", b == a && c == a);
    const QuadExt abpp = a - c + a * phi;      // |A''B''|
    const QuadExt bq = a * phi;                // |B''Q|
    const QuadExt br = phi * (b + c - a);      // |B''R|
    item("pentagon fifths: decagon side = phi a", abpp == bq);
    item("pentagon fifths: hexagon side = phi a", br == bq);
  }
  return rep;
}

}  // namespace archifold
