#include "archifold/mesh_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace archifold {

MeshDocument MeshDocument::of(const Polyhedron& poly) {
  MeshDocument doc;
  doc.mesh = poly;
  doc.report = metrics(poly);
  if (doc.report.wm_residual)
    doc.certificates["circumdiameter_edge_sextic"] = *doc.report.wm_residual;
  return doc;
}

void write_obj(std::ostream& os, const MeshDocument& doc) {
  char buf[128];
  os << "# " << doc.mesh.solid;
  if (!doc.mesh.parent.empty()) os << " on " << doc.mesh.parent;
  if (!doc.mesh.chirality.empty()) os << " (" << doc.mesh.chirality << ")";
  os << "\n";
  for (const Vec3& v : doc.mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    os << buf;
  }
  for (const auto& f : doc.mesh.faces) {
    os << "f";
    for (int i : f) os << ' ' << (i + 1);
    os << "\n";
  }
}

void write_json(std::ostream& os, const MeshDocument& doc) {
  nlohmann::ordered_json j;
  j["solid"] = doc.mesh.solid;
  j["parent"] = doc.mesh.parent;
  j["chirality"] = doc.mesh.chirality;
  auto& verts = j["vertices"] = nlohmann::ordered_json::array();
  for (const Vec3& v : doc.mesh.vertices) verts.push_back({v.x, v.y, v.z});
  auto& faces = j["faces"] = nlohmann::ordered_json::array();
  for (const auto& f : doc.mesh.faces) faces.push_back(f);
  auto& m = j["metrics"] = nlohmann::ordered_json::object();
  m["edge_min"] = doc.report.edge_min;
  m["edge_max"] = doc.report.edge_max;
  m["circumdiameter"] = doc.report.circumdiameter;
  m["vertex_norm_spread"] = doc.report.vertex_norm_spread;
  m["face_regularity_error"] = doc.report.face_regularity_error;
  for (const auto& [name, value] : doc.certificates) m[name] = value;
  os << j.dump(2) << "\n";
}

}  // namespace archifold
