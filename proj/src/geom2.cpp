#include "archifold/geom2.hpp"

#include <algorithm>
#include <cmath>

#include "archifold/cubic.hpp"
#include "archifold/errors.hpp"
#include "archifold/tolerances.hpp"

namespace archifold {

Crease Crease::from_line(const Line2& l) {
  Crease c{l, std::nullopt};
  if (std::abs(l.n.v) > kLineTol) c.slope_intercept = {l.d / l.n.v, -l.n.u / l.n.v};
  return c;
}

Point2 reflect(Point2 p, const Line2& f) {
  double s = f.signed_dist(p);
  return p - f.n * (2.0 * s);
}

Crease fold_point_to_point(Point2 p, Point2 q) {
  Vec2 diff = q - p;
  if (diff.u == 0.0 && diff.v == 0.0)
    throw CoincidentPoints("fold_point_to_point requires distinct points");
  Vec2 n = diff.normalized();
  Point2 mid = (p + q) * 0.5;
  return Crease::from_line({n, n.dot(mid)});
}

std::optional<Point2> line_intersection(const Line2& l1, const Line2& l2) {
  double det = l1.n.u * l2.n.v - l2.n.u * l1.n.v;
  if (std::abs(det) <= kLineTol) return std::nullopt;
  return Point2{(l1.d * l2.n.v - l2.d * l1.n.v) / det,
                (l1.n.u * l2.d - l2.n.u * l1.d) / det};
}

std::optional<std::pair<QuadExt, QuadExt>> exact_intersection(const ExactLine2& l1,
                                                              const ExactLine2& l2) {
  QuadExt det = l1.nu * l2.nv - l2.nu * l1.nv;
  if (det.is_zero()) return std::nullopt;
  return std::make_pair((l1.d * l2.nv - l2.d * l1.nv) / det,
                        (l1.nu * l2.d - l2.nu * l1.d) / det);
}

namespace {

// Canonical frame of g: origin at the foot of g from the world origin,
// first axis along g (rotated normal), second axis the normal itself.
struct GFrame {
  Point2 origin;
  Vec2 e1, e2;

  static GFrame of(const Line2& g) {
    return {g.foot(), {g.n.v, -g.n.u}, g.n};
  }
  Point2 to_frame(Point2 p) const {
    Vec2 q = p - origin;
    return {q.dot(e1), q.dot(e2)};
  }
  Point2 from_frame(Point2 q) const { return origin + e1 * q.u + e2 * q.v; }
  // line <n,p> = d expressed in frame coordinates
  Line2 line_to_frame(const Line2& l) const {
    return {{l.n.dot(e1), l.n.dot(e2)}, l.d - l.n.dot({origin.u, origin.v})};
  }
  Line2 line_from_frame(const Line2& l) const {
    Vec2 n = e1 * l.n.u + e2 * l.n.v;
    return {n, l.d + n.dot({origin.u, origin.v})};
  }
};

bool lines_parallel(const Line2& a, const Line2& b) {
  return std::abs(a.n.cross(b.n)) <= kLineTol;
}

Line2 crease_line_in_frame(double b, double c) {
  double s = std::hypot(1.0, c);
  return {{-c / s, 1.0 / s}, b / s};
}

}  // namespace

Poly<double> axiom6_slope_cubic(Point2 P, Point2 Q, const Line2& g, const Line2& h) {
  GFrame fr = GFrame::of(g);
  Point2 p = fr.to_frame(P), q = fr.to_frame(Q);
  Line2 hf = fr.line_to_frame(h);
  const double al = hf.n.u, be = hf.n.v, ga = hf.d;
  return Poly<double>({al * q.u + be * (p.v - q.v) - ga,
                       al * (2.0 * q.v - p.v) + 2.0 * be * (q.u - p.u),
                       al * (2.0 * p.u - q.u) + be * (q.v - p.v) - ga,
                       al * p.v});
}

std::vector<Crease> fold_axiom6(Point2 P, Point2 Q, const Line2& g, const Line2& h) {
  if (g.dist(P) <= kLineTol && h.dist(Q) <= kLineTol && lines_parallel(g, h))
    throw ForbiddenConfiguration(
        "P on g, Q on h with g parallel to h: every crease orthogonal to g works");

  GFrame fr = GFrame::of(g);
  Point2 p = fr.to_frame(P), q = fr.to_frame(Q);
  Line2 hf = fr.line_to_frame(h);
  const double al = hf.n.u, be = hf.n.v, ga = hf.d;

  // slope polynomial, possibly of degree < 3
  double a3 = al * p.v;
  double a2 = al * (2.0 * p.u - q.u) + be * (q.v - p.v) - ga;
  double a1 = al * (2.0 * q.v - p.v) + 2.0 * be * (q.u - p.u);
  double a0 = al * q.u + be * (p.v - q.v) - ga;
  double scale = std::max({std::abs(a0), std::abs(a1), std::abs(a2), std::abs(a3)});

  std::vector<double> slopes;
  if (scale > 0.0) {
    auto tiny = [&](double c) { return std::abs(c) <= 1e-13 * scale; };
    if (!tiny(a3)) {
      for (const auto& r : solve_cubic(Poly<double>({a0, a1, a2, a3})).roots)
        slopes.push_back(r.value);
    } else if (!tiny(a2)) {
      double disc = a1 * a1 - 4.0 * a2 * a0;
      if (disc >= 0.0) {
        double s = std::sqrt(disc);
        Poly<double> quad({a0, a1, a2});
        slopes.push_back(polish_root(quad, (-a1 + s) / (2.0 * a2)));
        slopes.push_back(polish_root(quad, (-a1 - s) / (2.0 * a2)));
      }
    } else if (!tiny(a1)) {
      slopes.push_back(-a0 / a1);
    }
  }

  std::vector<Crease> out;
  auto consider = [&](const Line2& frame_line) {
    Line2 world = fr.line_from_frame(frame_line);
    Point2 rp = reflect(P, world), rq = reflect(Q, world);
    if (!std::isfinite(rp.u) || !std::isfinite(rp.v)) return;
    if (g.dist(rp) > kGeomTol || h.dist(rq) > kGeomTol) return;
    for (const auto& prev : out) {
      double sign = prev.line.n.dot(world.n) >= 0.0 ? 1.0 : -1.0;
      if ((prev.line.n - world.n * sign).norm() < 1e-7 &&
          std::abs(prev.line.d - sign * world.d) < 1e-7)
        return;  // duplicate crease
    }
    out.push_back(Crease::from_line(world));
  };

  for (double c : slopes) {
    double b = (-2.0 * c * p.u + (1.0 - c * c) * p.v) / 2.0;
    consider(crease_line_in_frame(b, c));
  }
  // a crease perpendicular to g can work only when P lies on g
  if (std::abs(p.v) <= kLineTol && std::abs(al) > kLineTol) {
    double k = (ga + al * q.u - be * q.v) / (2.0 * al);
    consider({{1.0, 0.0}, k});
  }

  if (out.empty()) throw NoRealFold("no crease satisfies both incidence conditions");
  std::sort(out.begin(), out.end(), [](const Crease& x, const Crease& y) {
    if (x.line.n.u != y.line.n.u) return x.line.n.u < y.line.n.u;
    if (x.line.n.v != y.line.n.v) return x.line.n.v < y.line.n.v;
    return x.line.d < y.line.d;
  });
  return out;
}

}  // namespace archifold
