#pragma once

#include <array>
#include <string>
#include <vector>

#include "archifold/facerules.hpp"
#include "archifold/geom2.hpp"

namespace archifold {

// Verification record for one folding construction: the crease, the
// reflected images, and every named check with its outcome.
struct FoldTrace {
  enum class CheckKind {
    residual,      // pass when value <= tol
    exact,         // value is 0 (pass) or 1 (fail) from exact arithmetic
    lower_bound,   // pass when value >= tol
  };
  struct Check {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    CheckKind kind = CheckKind::residual;

    bool passed() const {
      switch (kind) {
        case CheckKind::residual: return value <= tol;
        case CheckKind::exact: return value == 0.0;
        case CheckKind::lower_bound: return value >= tol;
      }
      return false;
    }
  };

  std::string name;
  std::vector<std::pair<std::string, Point2>> input_points;
  std::vector<std::pair<std::string, Line2>> input_lines;
  Crease crease;
  std::vector<Point2> images;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
  const Check* find(const std::string& check_name) const {
    for (const auto& c : checks)
      if (c.name == check_name) return &c;
    return nullptr;
  }
};

// Cartesian chart of a pentagon face: origin at vertex O, first axis along
// OP, the OR basis vector at the pentagon's interior angle above it.
Point2 pentagon_to_cart(const FaceVec<double>& w);
Point2 pentagon_to_cart(const FaceVec<QuadExt>& w);

// One fold target for the snub-dodecahedron construction: an exact point G
// and the exact line g it is folded onto, in both the oblique chart (for
// zero-tolerance algebra) and the Cartesian chart (for reflections).
struct GTarget {
  FaceVec<QuadExt> point;
  Point2 point_cart;
  ExactLine2 line_oblique;  // affine line in (p, r) oblique coordinates
  Line2 line_cart;
};

std::array<GTarget, 5> g_points_and_lines();

// Exact regular-pentagon test: the 72-degree rotation about the exact
// centroid permutes the five points as a 5-cycle.
bool g_points_form_regular_pentagon();

// The single-fold square construction: fold corner P onto the opposite edge
// and the first quarter point Q onto the perpendicular h, then read off the
// vertex distances (x, y).
FoldTrace snub_cube_fold_trace();

// Crease through X on [OP] at distance x from O and Y on [OS] at distance y.
Crease snub_dodec_crease();

// Reflects each G_i across the crease and checks incidence with g_i, the
// exact concurrency of the five lines, and crease re-derivation from pairs.
FoldTrace verify_dodec_fold();

// Final fold: the crease placing X onto O also places Y onto the solid's
// vertex A1.
FoldTrace final_fold_to_A1();

}  // namespace archifold
