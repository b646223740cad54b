#pragma once

#include <map>
#include <ostream>
#include <string>

#include "archifold/solids.hpp"

namespace archifold {

// Self-contained export record: mesh plus the metric metadata emitted with it.
struct MeshDocument {
  Polyhedron mesh;
  MetricReport report;
  std::map<std::string, double> certificates;  // named residuals

  static MeshDocument of(const Polyhedron& poly);
};

// OBJ: "v x y z" with 17 significant digits, 1-based "f" lines,
// counterclockwise from outside. No normals or materials.
void write_obj(std::ostream& os, const MeshDocument& doc);

// JSON mirror of the OBJ content with 0-based face indices and a metrics
// object. Key order and float formatting are deterministic.
void write_json(std::ostream& os, const MeshDocument& doc);

}  // namespace archifold
