#include "archifold/kinds.hpp"

namespace archifold {

std::string name_of(PlatonicKind k) {
  switch (k) {
    case PlatonicKind::tetrahedron: return "tetrahedron";
    case PlatonicKind::cube: return "cube";
    case PlatonicKind::octahedron: return "octahedron";
    case PlatonicKind::dodecahedron: return "dodecahedron";
    case PlatonicKind::icosahedron: return "icosahedron";
  }
  return "?";
}

std::string name_of(ArchimedeanKind k) {
  switch (k) {
    case ArchimedeanKind::truncated_tetrahedron: return "truncated-tetrahedron";
    case ArchimedeanKind::truncated_cube: return "truncated-cube";
    case ArchimedeanKind::truncated_octahedron: return "truncated-octahedron";
    case ArchimedeanKind::truncated_dodecahedron: return "truncated-dodecahedron";
    case ArchimedeanKind::truncated_icosahedron: return "truncated-icosahedron";
    case ArchimedeanKind::cuboctahedron: return "cuboctahedron";
    case ArchimedeanKind::icosidodecahedron: return "icosidodecahedron";
    case ArchimedeanKind::rhombicuboctahedron: return "rhombicuboctahedron";
    case ArchimedeanKind::truncated_cuboctahedron: return "truncated-cuboctahedron";
    case ArchimedeanKind::rhombicosidodecahedron: return "rhombicosidodecahedron";
    case ArchimedeanKind::truncated_icosidodecahedron: return "truncated-icosidodecahedron";
    case ArchimedeanKind::snub_cube: return "snub-cube";
    case ArchimedeanKind::snub_dodecahedron: return "snub-dodecahedron";
  }
  return "?";
}

std::string name_of(Chirality c) { return c == Chirality::left ? "left" : "right"; }

std::optional<PlatonicKind> parse_platonic(const std::string& name) {
  for (PlatonicKind k : all_platonic())
    if (name_of(k) == name) return k;
  return std::nullopt;
}

std::optional<ArchimedeanKind> parse_archimedean(const std::string& name) {
  for (ArchimedeanKind k : all_archimedean())
    if (name_of(k) == name) return k;
  return std::nullopt;
}

std::optional<Chirality> parse_chirality(const std::string& name) {
  if (name == "left") return Chirality::left;
  if (name == "right") return Chirality::right;
  return std::nullopt;
}

const std::vector<PlatonicKind>& all_platonic() {
  static const std::vector<PlatonicKind> ks = {
      PlatonicKind::tetrahedron, PlatonicKind::cube, PlatonicKind::octahedron,
      PlatonicKind::dodecahedron, PlatonicKind::icosahedron};
  return ks;
}

const std::vector<ArchimedeanKind>& all_archimedean() {
  static const std::vector<ArchimedeanKind> ks = {
      ArchimedeanKind::truncated_tetrahedron,
      ArchimedeanKind::truncated_cube,
      ArchimedeanKind::truncated_octahedron,
      ArchimedeanKind::truncated_dodecahedron,
      ArchimedeanKind::truncated_icosahedron,
      ArchimedeanKind::cuboctahedron,
      ArchimedeanKind::icosidodecahedron,
      ArchimedeanKind::rhombicuboctahedron,
      ArchimedeanKind::truncated_cuboctahedron,
      ArchimedeanKind::rhombicosidodecahedron,
      ArchimedeanKind::truncated_icosidodecahedron,
      ArchimedeanKind::snub_cube,
      ArchimedeanKind::snub_dodecahedron};
  return ks;
}

PlatonicKind canonical_parent(ArchimedeanKind k) {
  switch (k) {
    case ArchimedeanKind::truncated_tetrahedron:
      return PlatonicKind::tetrahedron;
    case ArchimedeanKind::truncated_cube:
    case ArchimedeanKind::cuboctahedron:
    case ArchimedeanKind::rhombicuboctahedron:
    case ArchimedeanKind::truncated_cuboctahedron:
    case ArchimedeanKind::snub_cube:
      return PlatonicKind::cube;
    case ArchimedeanKind::truncated_octahedron:
      return PlatonicKind::octahedron;
    case ArchimedeanKind::truncated_icosahedron:
      return PlatonicKind::icosahedron;
    default:
      return PlatonicKind::dodecahedron;
  }
}

}  // namespace archifold
