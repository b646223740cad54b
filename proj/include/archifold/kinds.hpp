#pragma once

#include <optional>
#include <string>
#include <vector>

namespace archifold {

enum class PlatonicKind {
  tetrahedron,
  cube,
  octahedron,
  dodecahedron,
  icosahedron,
};

enum class ArchimedeanKind {
  truncated_tetrahedron,
  truncated_cube,
  truncated_octahedron,
  truncated_dodecahedron,
  truncated_icosahedron,
  cuboctahedron,
  icosidodecahedron,
  rhombicuboctahedron,
  truncated_cuboctahedron,
  rhombicosidodecahedron,
  truncated_icosidodecahedron,
  snub_cube,
  snub_dodecahedron,
};

enum class Chirality { left, right };

std::string name_of(PlatonicKind k);
std::string name_of(ArchimedeanKind k);
std::string name_of(Chirality c);

std::optional<PlatonicKind> parse_platonic(const std::string& name);
std::optional<ArchimedeanKind> parse_archimedean(const std::string& name);
std::optional<Chirality> parse_chirality(const std::string& name);

const std::vector<PlatonicKind>& all_platonic();
const std::vector<ArchimedeanKind>& all_archimedean();

inline bool is_snub(ArchimedeanKind k) {
  return k == ArchimedeanKind::snub_cube || k == ArchimedeanKind::snub_dodecahedron;
}

// The parent solid whose faces carry the construction by default.
PlatonicKind canonical_parent(ArchimedeanKind k);

}  // namespace archifold
