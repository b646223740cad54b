#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "archifold/poly.hpp"
#include "archifold/quadext.hpp"

namespace archifold {

struct Vec2 {
  double u = 0.0;
  double v = 0.0;

  Vec2 operator+(Vec2 o) const { return {u + o.u, v + o.v}; }
  Vec2 operator-(Vec2 o) const { return {u - o.u, v - o.v}; }
  Vec2 operator*(double s) const { return {u * s, v * s}; }
  double dot(Vec2 o) const { return u * o.u + v * o.v; }
  double cross(Vec2 o) const { return u * o.v - v * o.u; }
  double norm() const { return std::hypot(u, v); }
  Vec2 normalized() const { double n = norm(); return {u / n, v / n}; }
  Vec2 perp() const { return {-v, u}; }
};

using Point2 = Vec2;

inline double dist(Point2 a, Point2 b) { return (a - b).norm(); }

// Oriented line { p : <n, p> = d } with unit normal n.
struct Line2 {
  Vec2 n{0.0, 1.0};
  double d = 0.0;

  static Line2 from_normal(Vec2 n, double d) {
    double len = n.norm();
    return {n * (1.0 / len), d / len};
  }
  static Line2 through(Point2 a, Point2 b) {
    Vec2 nrm = (b - a).perp();
    return from_normal(nrm, nrm.dot(a));
  }
  static Line2 horizontal(double v) { return {{0.0, 1.0}, v}; }
  static Line2 vertical(double u) { return {{1.0, 0.0}, u}; }

  double signed_dist(Point2 p) const { return n.dot(p) - d; }
  double dist(Point2 p) const { return std::abs(signed_dist(p)); }
  Vec2 direction() const { return {n.v, -n.u}; }
  Point2 foot() const { return {n.u * d, n.v * d}; }  // closest point to origin
};

// Fold line. slope_intercept (b, c) is present when the crease can be
// written as { (0,b) + u*(1,c) }, i.e. whenever it is not vertical.
struct Crease {
  Line2 line;
  std::optional<std::pair<double, double>> slope_intercept;  // (b, c)

  static Crease from_line(const Line2& l);
};

Point2 reflect(Point2 p, const Line2& f);
inline Point2 reflect(Point2 p, const Crease& f) { return reflect(p, f.line); }

// Perpendicular bisector crease: reflect(p, result) == q.
// Throws CoincidentPoints when p == q.
Crease fold_point_to_point(Point2 p, Point2 q);

// Single-crease fold placing P onto g and Q onto h. Returns all creases
// (1 to 3). Throws ForbiddenConfiguration for the degenerate case where P
// is on g, Q is on h and g, h are parallel or equal; throws NoRealFold when
// no crease satisfies both conditions.
std::vector<Crease> fold_axiom6(Point2 P, Point2 Q, const Line2& g, const Line2& h);

// The cubic in the crease slope that fold_axiom6 reduces to, expressed in
// the canonical frame of g (origin at the foot of g, first axis along g).
// Coefficients ascending; degree may drop below 3 in degenerate positions.
Poly<double> axiom6_slope_cubic(Point2 P, Point2 Q, const Line2& g, const Line2& h);

// Unique intersection point, or nullopt for parallel (or equal) lines.
std::optional<Point2> line_intersection(const Line2& l1, const Line2& l2);

// Exact affine line { w : nu*w_u + nv*w_v = d } over a quadratic field,
// in whatever exact planar coordinate chart the caller fixes.
struct ExactLine2 {
  QuadExt nu, nv, d;

  static ExactLine2 through(const QuadExt& au, const QuadExt& av,
                            const QuadExt& bu, const QuadExt& bv) {
    QuadExt nu = av - bv, nv = bu - au;
    return {nu, nv, nu * au + nv * av};
  }
  bool contains(const QuadExt& wu, const QuadExt& wv) const {
    return nu * wu + nv * wv == d;
  }
};

// Exact meet of two exact lines; nullopt when parallel or equal.
std::optional<std::pair<QuadExt, QuadExt>> exact_intersection(const ExactLine2& l1,
                                                              const ExactLine2& l2);

}  // namespace archifold
