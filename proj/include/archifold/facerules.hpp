#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "archifold/geom2.hpp"
#include "archifold/kinds.hpp"
#include "archifold/poly.hpp"
#include "archifold/quadext.hpp"

namespace archifold {

enum class FacePattern {
  corner_cut,      // vertices on the parent edges, parent face keeps a 2m-gon
  midpoint,        // edge midpoints, parent face keeps an m-gon
  inner_polygon,   // one inner m-gon strictly inside the face
  inner_2polygon,  // one inner 2m-gon strictly inside the face
};

// Edge subdivision table for one (solid, parent) pair. Ratios are exact and
// palindromic; positions along an edge are their normalized prefix sums.
struct DivisionRule {
  ArchimedeanKind solid;
  PlatonicKind parent;
  std::vector<QuadExt> edge_ratios;
  FacePattern pattern;

  std::vector<double> division_params() const;  // interior prefix sums / total
  bool is_palindrome() const;
};

// Throws UnsupportedPair when the pair has no face construction.
DivisionRule division_rule(ArchimedeanKind solid, PlatonicKind parent);

// Solved per-face placement parameters of a snub solid: perpendicular
// distances (x, y) of a vertex from the two nearest parent-face edges,
// x >= y, plus the defining cubic and named residual magnitudes.
struct SnubParams {
  double x = 0.0;
  double y = 0.0;
  Poly<double> cubic;
  std::map<std::string, double> residuals;
};

SnubParams snub_cube_params();
SnubParams snub_dodec_params();

// Exact defining cubic of the snub dodecahedron parameter over Q(sqrt 5).
Poly<QuadExt> snub_dodec_cubic_exact();
// Its degree-6 minimal polynomial over Q: the product with the conjugate
// cubic divided by 31. Coefficients are exact rationals.
Poly<Rational> snub_dodec_minimal_poly();

// Coordinates in the oblique (OP, OR) basis of a pentagon face, where both
// basis vectors have length 1 and meet at the pentagon's interior angle.
template <typename S>
struct FaceVec {
  S p, r;
};

double gram_inner(const FaceVec<double>& u, const FaceVec<double>& v);
QuadExt gram_inner(const FaceVec<QuadExt>& u, const FaceVec<QuadExt>& v);

// One step of the face's 5-fold rotation in oblique coordinates
// (the vertex cycle O -> R -> S -> T -> P).
FaceVec<double> pentagon_rotate(const FaceVec<double>& w);
FaceVec<QuadExt> pentagon_rotate(const FaceVec<QuadExt>& w);
// Linear part of pentagon_rotate (rotation by 72 degrees about the center).
FaceVec<QuadExt> pentagon_rotate_linear(const FaceVec<QuadExt>& w);

// The rotated square on a unit cube face, corners listed in rotation order.
// Coordinates are in the unit-square frame of the face.
std::array<Point2, 4> snub_cube_face_square(const SnubParams& params,
                                            Chirality chirality = Chirality::right);

// The rotated pentagon on a dodecahedron face in oblique coordinates.
std::array<FaceVec<double>, 5> snub_dodec_face_pentagon(const SnubParams& params,
                                                        Chirality chirality = Chirality::right);

// Residuals of the two equilateral-triangle conditions at the given
// parameters, evaluated through the squared-distance polynomials.
std::pair<double, double> equilateral_residuals(ArchimedeanKind solid, const SnubParams& params);

// Exact identity suite behind the division-rule tables. Every item is a
// zero-tolerance equality in Q(sqrt 2) or Q(sqrt 5).
struct IdentityReport {
  struct Item {
    std::string name;
    bool pass;
  };
  std::vector<Item> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

IdentityReport verify_ratio_identities();

}  // namespace archifold
