#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "archifold/facerules.hpp"
#include "archifold/kinds.hpp"

namespace archifold {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(Vec3 o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const { double n = norm(); return {x / n, y / n, z / n}; }
};

inline double dist(Vec3 a, Vec3 b) { return (a - b).norm(); }

// Indexed mesh. Faces are vertex-index cycles, counterclockwise viewed from
// outside; the solid is centered at the origin with unit parent edge length.
struct Polyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;
  std::string solid;
  std::string parent;      // empty for the platonic solids themselves
  std::string chirality;   // "left"/"right" for snubs, else empty

  std::vector<std::pair<int, int>> edges() const;  // unique, lexicographic
};

struct MeshChecks {
  bool two_manifold = false;      // every edge in exactly 2 faces, opposite senses
  int euler_characteristic = 0;   // V - E + F
  double min_vertex_separation = 0.0;
  bool ok(double merge_tol) const {
    return two_manifold && euler_characteristic == 2 && min_vertex_separation > merge_tol;
  }
};

MeshChecks mesh_checks(const Polyhedron& poly);

struct MetricReport {
  double edge_min = 0.0;
  double edge_max = 0.0;
  double circumdiameter = 0.0;
  double vertex_norm_spread = 0.0;     // max - min vertex distance from center
  double face_regularity_error = 0.0;  // worst side/radius/planarity deviation
  std::optional<double> wm_residual;   // snub-cube circumdiameter certificate
};

struct FaceRegularityReport {
  double max_side_spread = 0.0;
  double max_radius_spread = 0.0;
  double max_planarity_error = 0.0;
  bool pass = false;
};

Polyhedron platonic(PlatonicKind kind);

// Archimedean solid on its canonical parent. Chirality is required for the
// two snub solids and rejected otherwise.
Polyhedron build_archimedean(ArchimedeanKind kind,
                             std::optional<Chirality> chirality = std::nullopt);

// Same construction on an explicitly chosen parent (every pair accepted by
// division_rule, plus the snubs on their canonical parents).
Polyhedron build_archimedean_on(ArchimedeanKind kind, PlatonicKind parent,
                                std::optional<Chirality> chirality = std::nullopt);

MetricReport metrics(const Polyhedron& poly);

FaceRegularityReport verify_regular_faces(const Polyhedron& poly, double tol);

}  // namespace archifold
