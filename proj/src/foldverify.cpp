#include "archifold/foldverify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "archifold/errors.hpp"
#include "archifold/tolerances.hpp"

namespace archifold {

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kCos108 = (1.0 - std::sqrt(5.0)) / 4.0;
const double kSin108 = std::sqrt(1.0 - kCos108 * kCos108);

QuadExt q5(Rational a, Rational b = 0) { return QuadExt(std::move(a), std::move(b), 5); }
QuadExt phi_frac(int num_phi, int den_phi, int num_c, int den_c) {
  // (num_phi/den_phi)*phi + num_c/den_c
  Rational k(num_phi, den_phi);
  return q5(k / Rational(2) + Rational(num_c, den_c), k / Rational(2));
}

void require_passed(const FoldTrace& t) {
  for (const auto& c : t.checks)
    if (!c.passed())
      throw VerificationFailed(t.name + ": check '" + c.name + "' failed with value " +
                               std::to_string(c.value));
}

double crease_distance(const Crease& a, const Crease& b) {
  double sign = a.line.n.dot(b.line.n) >= 0.0 ? 1.0 : -1.0;
  return std::max((a.line.n - b.line.n * sign).norm(), std::abs(a.line.d - sign * b.line.d));
}

struct DodecFrame {
  SnubParams params = snub_dodec_params();
  Point2 X, Y;
  Crease crease;

  DodecFrame() {
    X = pentagon_to_cart(FaceVec<double>{params.x, 0.0});
    Y = pentagon_to_cart(FaceVec<double>{params.y / kPhi, params.y});
    crease = Crease::from_line(Line2::through(X, Y));
  }
};

}  // namespace

Point2 pentagon_to_cart(const FaceVec<double>& w) {
  return {w.p + w.r * kCos108, w.r * kSin108};
}

Point2 pentagon_to_cart(const FaceVec<QuadExt>& w) {
  return pentagon_to_cart(FaceVec<double>{w.p.to_double(), w.r.to_double()});
}

std::array<GTarget, 5> g_points_and_lines() {
  const QuadExt c108 = q5(Rational(1, 4), Rational(-1, 4));
  const QuadExt inv_phi = q5(Rational(-1, 2), Rational(1, 2));  // 1/phi = phi - 1

  struct TargetDef {
    QuadExt anchor_p, anchor_r;  // distance is measured from this vertex
    QuadExt dir_p, dir_r;        // along the reference line, unit length/phi
    QuadExt dir_scale;           // 1/|dir|
    QuadExt delta;               // distance of the foot from the anchor
    int sign;                    // which ray from the anchor
  };

  const QuadExt zero = q5(0), one = q5(1);
  const QuadExt phi = QuadExt::golden();
  // pentagon vertices in oblique coordinates: O=(0,0), P=(1,0), R=(0,1),
  // S=(1,phi), T=(phi,1); all reference segments from the construction
  const std::array<TargetDef, 5> specs = {{
      // perpendicular to PR, distance measured from P toward R
      {one, zero, -one, one, inv_phi, phi_frac(12, 31, -1, 31), +1},
      // perpendicular to PO, distance from O away from P
      {zero, zero, one, zero, one, phi_frac(33, 62, 18, 31), -1},
      // perpendicular to SP, distance from P away from S
      {one, zero, zero, phi, inv_phi, phi_frac(11, 62, 37, 31), -1},
      // perpendicular to SO, distance from O away from S
      {zero, zero, one, phi, inv_phi, phi_frac(39, 31, 20, 31), -1},
      // perpendicular to TO, distance from O away from T
      {zero, zero, phi, one, inv_phi, phi_frac(38, 31, 35, 62), -1},
  }};

  const std::array<FaceVec<QuadExt>, 5> points = {{
      {phi_frac(37, 31, 15, 31), phi_frac(22, 31, 24, 31)},
      {phi_frac(42, 31, 12, 31), phi_frac(29, 31, 26, 31)},
      {phi_frac(47, 31, 9, 31), phi_frac(17, 31, 27, 31)},
      {phi_frac(46, 31, 22, 31), phi_frac(27, 31, 21, 31)},
      {phi_frac(49, 31, 14, 31), phi_frac(26, 31, 34, 31)},
  }};

  std::array<GTarget, 5> out;
  for (int i = 0; i < 5; ++i) {
    const TargetDef& s = specs[i];
    QuadExt step = s.delta * s.dir_scale * Rational(s.sign);
    QuadExt foot_p = s.anchor_p + s.dir_p * step;
    QuadExt foot_r = s.anchor_r + s.dir_r * step;
    // direction with zero gram product against the reference line
    QuadExt alpha = s.dir_p + s.dir_r * c108;
    QuadExt beta = s.dir_r + s.dir_p * c108;
    QuadExt t_p = -beta, t_r = alpha;

    GTarget gt{points[i], pentagon_to_cart(points[i]),
               ExactLine2::through(foot_p, foot_r, foot_p + t_p, foot_r + t_r),
               Line2::through(pentagon_to_cart(FaceVec<QuadExt>{foot_p, foot_r}),
                              pentagon_to_cart(FaceVec<QuadExt>{foot_p + t_p, foot_r + t_r}))};
    out[i] = gt;
  }
  return out;
}

bool g_points_form_regular_pentagon() {
  auto targets = g_points_and_lines();
  const QuadExt five = q5(5);
  FaceVec<QuadExt> c{q5(0), q5(0)};
  for (const auto& t : targets) {
    c.p = c.p + t.point.p;
    c.r = c.r + t.point.r;
  }
  c = {c.p / five, c.r / five};

  // the exact 72-degree rotation about the centroid must permute the set
  // as a single 5-cycle
  std::array<int, 5> image{};
  for (int i = 0; i < 5; ++i) {
    FaceVec<QuadExt> rel{targets[i].point.p - c.p, targets[i].point.r - c.r};
    FaceVec<QuadExt> rot = pentagon_rotate_linear(rel);
    FaceVec<QuadExt> w{rot.p + c.p, rot.r + c.r};
    image[i] = -1;
    for (int j = 0; j < 5; ++j)
      if (w.p == targets[j].point.p && w.r == targets[j].point.r) image[i] = j;
    if (image[i] < 0) return false;
  }
  int cur = 0;
  for (int step = 0; step < 5; ++step) cur = image[cur];
  std::array<bool, 5> seen{};
  cur = 0;
  for (int step = 0; step < 5; ++step) {
    if (seen[cur]) return false;
    seen[cur] = true;
    cur = image[cur];
  }
  return cur == 0;
}

FoldTrace snub_cube_fold_trace() {
  FoldTrace t;
  t.name = "snub-cube-fold";
  const SnubParams sp = snub_cube_params();
  const Point2 P{0.0, 0.0}, Q{0.25, 0.0};
  const Line2 g = Line2::horizontal(1.0);
  const Line2 h = Line2::vertical(0.75);

  t.input_points = {{"P", P}, {"Q", Q}};
  t.input_lines = {{"g", g}, {"h", h}};

  std::vector<Crease> creases = fold_axiom6(P, Q, g, h);
  t.checks.push_back({"unique-crease", creases.size() == 1 ? 0.0 : 1.0, 0.0,
                      FoldTrace::CheckKind::exact});
  if (creases.size() != 1)
    throw VerificationFailed("snub-cube fold: expected exactly one crease, got " +
                             std::to_string(creases.size()));
  t.crease = creases.front();

  const Point2 p_img = reflect(P, t.crease);
  const Point2 q_img = reflect(Q, t.crease);
  t.checks.push_back({"corner-distance-x", std::abs(dist(p_img, {1.0, 1.0}) - sp.x), 1e-10});
  t.checks.push_back({"edge-distance-y", std::abs(g.dist(q_img) - sp.y), 1e-10});

  const auto [b, c] = *t.crease.slope_intercept;
  t.checks.push_back({"slope-is-x-minus-1", std::abs(c - (sp.x - 1.0)), 1e-10});
  t.checks.push_back({"intercept-relation", std::abs(2.0 * b - (1.0 + c * c)), kRootTol});

  // second fold: perpendicular to g, placing the image of P onto h
  const Crease to_h = fold_point_to_point(p_img, {0.75, p_img.v});
  const Point2 a1 = reflect(q_img, to_h);
  const Point2 expected = snub_cube_face_square(sp)[2];  // corner at (1-x, 1-y)
  t.checks.push_back({"a1-matches-square-vertex", dist(a1, expected), kGeomTol});
  // that crease maps g onto itself
  const Point2 g_probe = reflect(Point2{0.2, 1.0}, to_h);
  t.checks.push_back({"g-maps-onto-itself", g.dist(g_probe), kRootTol});

  t.images = {p_img, q_img, a1};
  require_passed(t);
  return t;
}

Crease snub_dodec_crease() { return DodecFrame().crease; }

FoldTrace verify_dodec_fold() {
  FoldTrace t;
  t.name = "snub-dodecahedron-fold";
  DodecFrame df;
  t.crease = df.crease;
  auto targets = g_points_and_lines();
  for (int i = 0; i < 5; ++i) {
    t.input_points.emplace_back("point-" + std::to_string(i + 1), targets[i].point_cart);
    t.input_lines.emplace_back("line-" + std::to_string(i + 1), targets[i].line_cart);
  }

  for (int i = 0; i < 5; ++i) {
    Point2 img = reflect(targets[i].point_cart, df.crease);
    t.images.push_back(img);
    t.checks.push_back({"image-" + std::to_string(i + 1) + "-on-line",
                        targets[i].line_cart.dist(img), kGeomTol});
  }

  t.checks.push_back({"points-form-regular-pentagon",
                      g_points_form_regular_pentagon() ? 0.0 : 1.0, 0.0,
                      FoldTrace::CheckKind::exact});

  // the five lines meet in one exact point
  auto common = exact_intersection(targets[0].line_oblique, targets[1].line_oblique);
  bool concurrent = common.has_value();
  if (common) {
    for (int i = 2; i < 5; ++i)
      concurrent = concurrent && targets[i].line_oblique.contains(common->first, common->second);
  }
  t.checks.push_back({"lines-concurrent", concurrent ? 0.0 : 1.0, 0.0,
                      FoldTrace::CheckKind::exact});

  if (common) {
    Point2 common_cart =
        pentagon_to_cart(FaceVec<QuadExt>{common->first, common->second});
    double sep = dist(common_cart, t.images[4]);
    t.checks.push_back({"common-point-misses-last-image", sep, 1e-6,
                        FoldTrace::CheckKind::lower_bound});
  }

  // any two targets re-derive the same crease through the two-point fold
  double worst = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      std::vector<Crease> cands = fold_axiom6(targets[i].point_cart, targets[j].point_cart,
                                              targets[i].line_cart, targets[j].line_cart);
      double best = std::numeric_limits<double>::infinity();
      for (const auto& cand : cands) best = std::min(best, crease_distance(cand, df.crease));
      worst = std::max(worst, best);
    }
  t.checks.push_back({"pairwise-rederivation", worst, 1e-8});

  require_passed(t);
  return t;
}

FoldTrace final_fold_to_A1() {
  FoldTrace t;
  t.name = "snub-dodecahedron-final-fold";
  DodecFrame df;
  const double x = df.params.x, y = df.params.y;
  t.input_points = {{"X", df.X}, {"Y", df.Y}, {"O", Point2{0.0, 0.0}}};

  const Crease ell = fold_point_to_point(df.X, Point2{0.0, 0.0});
  t.crease = ell;
  const Point2 x_img = reflect(df.X, ell);
  const Point2 y_img = reflect(df.Y, ell);
  const Point2 a1 = pentagon_to_cart(FaceVec<double>{x, y});
  t.images = {x_img, y_img};

  t.checks.push_back({"x-lands-on-origin", x_img.norm(), kRootTol});
  t.checks.push_back({"y-lands-on-a1", dist(y_img, a1), kGeomTol});

  const double gram = gram_inner(FaceVec<double>{x, y}, FaceVec<double>{x, y});
  t.checks.push_back(
      {"a1-norm-closed-form", std::abs(gram - (x * x + y * y - x * y / kPhi)), kRootTol});
  t.checks.push_back({"a1-norm-matches-chart", std::abs(gram - a1.dot(a1)), kRootTol});

  require_passed(t);
  return t;
}

}  // namespace archifold
