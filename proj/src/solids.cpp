#include "archifold/solids.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>

#include "archifold/errors.hpp"
#include "archifold/tolerances.hpp"

namespace archifold {

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kSqrt2 = std::sqrt(2.0);

Vec3 newell_normal(const std::vector<Vec3>& v, const std::vector<int>& face) {
  Vec3 n{};
  for (std::size_t i = 0; i < face.size(); ++i) {
    Vec3 a = v[face[i]], b = v[face[(i + 1) % face.size()]];
    n = n + a.cross(b);
  }
  return n;
}

Vec3 centroid(const std::vector<Vec3>& v, const std::vector<int>& face) {
  Vec3 c{};
  for (int i : face) c = c + v[i];
  return c * (1.0 / static_cast<double>(face.size()));
}

void orient_outward(Polyhedron& poly) {
  for (auto& f : poly.faces) {
    if (newell_normal(poly.vertices, f).dot(centroid(poly.vertices, f)) < 0.0)
      std::reverse(f.begin(), f.end());
  }
}

// Sorts the given vertex indices into a cycle by angle around the axis.
std::vector<int> order_cycle(const std::vector<Vec3>& v, std::vector<int> idx, Vec3 axis) {
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  Vec3 c{};
  for (int i : idx) c = c + v[i];
  c = c * (1.0 / static_cast<double>(idx.size()));
  Vec3 ax = axis.normalized();
  Vec3 ref = v[idx[0]] - c;
  ref = ref - ax * ref.dot(ax);
  ref = ref.normalized();
  Vec3 ref2 = ax.cross(ref);
  std::vector<std::pair<double, int>> ang;
  ang.reserve(idx.size());
  for (int i : idx) {
    Vec3 w = v[i] - c;
    ang.emplace_back(std::atan2(w.dot(ref2), w.dot(ref)), i);
  }
  std::sort(ang.begin(), ang.end());
  std::vector<int> out;
  out.reserve(ang.size());
  for (auto& [a, i] : ang) out.push_back(i);
  return out;
}

std::vector<Vec3> platonic_vertices(PlatonicKind kind) {
  std::vector<Vec3> v;
  switch (kind) {
    case PlatonicKind::tetrahedron: {
      double s = 1.0 / (2.0 * kSqrt2);
      v = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
      break;
    }
    case PlatonicKind::cube: {
      for (int i = 0; i < 8; ++i)
        v.push_back({(i & 4) ? 0.5 : -0.5, (i & 2) ? 0.5 : -0.5, (i & 1) ? 0.5 : -0.5});
      break;
    }
    case PlatonicKind::octahedron: {
      double a = 1.0 / kSqrt2;
      v = {{a, 0, 0}, {-a, 0, 0}, {0, a, 0}, {0, -a, 0}, {0, 0, a}, {0, 0, -a}};
      break;
    }
    case PlatonicKind::icosahedron: {
      double a = 0.5, b = kPhi / 2.0;
      for (double i : {1.0, -1.0})
        for (double j : {1.0, -1.0}) {
          v.push_back({0, i * a, j * b});
          v.push_back({i * a, j * b, 0});
          v.push_back({j * b, 0, i * a});
        }
      break;
    }
    case PlatonicKind::dodecahedron: {
      double s = kPhi / 2.0;  // rescales edge 2/phi to 1
      for (int i = 0; i < 8; ++i)
        v.push_back({(i & 4) ? s : -s, (i & 2) ? s : -s, (i & 1) ? s : -s});
      double p = s / kPhi, q = s * kPhi;
      for (double i : {1.0, -1.0})
        for (double j : {1.0, -1.0}) {
          v.push_back({0, i * p, j * q});
          v.push_back({i * p, j * q, 0});
          v.push_back({j * q, 0, i * p});
        }
      break;
    }
  }
  return v;
}

// Faces from the edge graph: neighbors of each vertex in counterclockwise
// order seen from outside, then each directed edge traced by turning to the
// predecessor of the incoming edge. Convexity and vertex transitivity make
// the minimal pairwise distance the edge length.
std::vector<std::vector<int>> trace_faces(const std::vector<Vec3>& v) {
  const int n = static_cast<int>(v.size());
  double mind = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) mind = std::min(mind, dist(v[i], v[j]));

  std::vector<std::vector<int>> nbrs(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && dist(v[i], v[j]) < mind * (1.0 + 1e-9)) nbrs[i].push_back(j);

  for (int i = 0; i < n; ++i) {
    Vec3 axis = v[i].normalized();
    Vec3 ref = v[nbrs[i][0]] - v[i];
    ref = (ref - axis * ref.dot(axis)).normalized();
    Vec3 ref2 = axis.cross(ref);
    std::vector<std::pair<double, int>> ang;
    for (int j : nbrs[i]) {
      Vec3 w = v[j] - v[i];
      w = w - axis * w.dot(axis);
      ang.emplace_back(std::atan2(w.dot(ref2), w.dot(ref)), j);
    }
    std::sort(ang.begin(), ang.end());
    nbrs[i].clear();
    for (auto& [a, j] : ang) nbrs[i].push_back(j);
  }

  std::vector<std::vector<int>> faces;
  std::map<std::pair<int, int>, bool> visited;
  for (int a = 0; a < n; ++a) {
    for (int b0 : nbrs[a]) {
      if (visited.count({a, b0})) continue;
      std::vector<int> face;
      int x = a, y = b0;
      while (!visited.count({x, y})) {
        visited[{x, y}] = true;
        face.push_back(x);
        auto& ny = nbrs[y];
        int k = static_cast<int>(std::find(ny.begin(), ny.end(), x) - ny.begin());
        int z = ny[(k - 1 + ny.size()) % ny.size()];
        x = y;
        y = z;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

// Merges vertices closer than kMergeTol via a uniform spatial hash.
class VertexMerger {
 public:
  int add(Vec3 p) {
    auto cell = cell_of(p);
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find(key(cell[0] + dx, cell[1] + dy, cell[2] + dz));
          if (it == cells_.end()) continue;
          for (int i : it->second)
            if (dist(points_[i], p) < kMergeTol) return i;
        }
    points_.push_back(p);
    cells_[key(cell[0], cell[1], cell[2])].push_back(static_cast<int>(points_.size()) - 1);
    return static_cast<int>(points_.size()) - 1;
  }
  const std::vector<Vec3>& points() const { return points_; }

 private:
  static constexpr double kCell = 1e-6;
  static std::array<std::int64_t, 3> cell_of(Vec3 p) {
    return {static_cast<std::int64_t>(std::floor(p.x / kCell)),
            static_cast<std::int64_t>(std::floor(p.y / kCell)),
            static_cast<std::int64_t>(std::floor(p.z / kCell))};
  }
  static std::uint64_t key(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t t : {a, b, c}) {
      h ^= static_cast<std::uint64_t>(t);
      h *= 1099511628211ull;
    }
    return h;
  }
  std::vector<Vec3> points_;
  std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

struct Frame2 {
  Vec3 origin, e1, e2;
  Point2 to2(Vec3 p) const {
    Vec3 q = p - origin;
    return {q.dot(e1), q.dot(e2)};
  }
  Vec3 to3(Point2 q) const { return origin + e1 * q.u + e2 * q.v; }
};

Frame2 face_frame(const std::vector<Vec3>& v, const std::vector<int>& face) {
  Vec3 n = newell_normal(v, face).normalized();
  Vec3 e1 = (v[face[1]] - v[face[0]]).normalized();
  return {v[face[0]], e1, n.cross(e1)};
}

Point2 isect(Point2 a, Vec2 da, Point2 b, Vec2 db) {
  double det = da.cross(db);
  double t = (b - a).cross(db) / det;
  return a + da * t;
}

}  // namespace

std::vector<std::pair<int, int>> Polyhedron::edges() const {
  std::map<std::pair<int, int>, int> seen;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      seen[{std::min(a, b), std::max(a, b)}]++;
    }
  std::vector<std::pair<int, int>> out;
  out.reserve(seen.size());
  for (auto& [e, c] : seen) out.push_back(e);
  return out;
}

MeshChecks mesh_checks(const Polyhedron& poly) {
  MeshChecks mc;
  std::map<std::pair<int, int>, std::vector<int>> senses;  // (min,max) -> directions
  for (const auto& f : poly.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      senses[{std::min(a, b), std::max(a, b)}].push_back(a < b ? +1 : -1);
    }
  mc.two_manifold = true;
  for (auto& [e, dirs] : senses)
    if (dirs.size() != 2 || dirs[0] + dirs[1] != 0) mc.two_manifold = false;
  mc.euler_characteristic = static_cast<int>(poly.vertices.size()) -
                            static_cast<int>(senses.size()) +
                            static_cast<int>(poly.faces.size());
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < poly.vertices.size(); ++j)
      sep = std::min(sep, dist(poly.vertices[i], poly.vertices[j]));
  mc.min_vertex_separation = sep;
  return mc;
}

Polyhedron platonic(PlatonicKind kind) {
  Polyhedron poly;
  poly.vertices = platonic_vertices(kind);
  poly.faces = trace_faces(poly.vertices);
  poly.solid = name_of(kind);
  orient_outward(poly);
  return poly;
}

Polyhedron build_archimedean_on(ArchimedeanKind kind, PlatonicKind parent,
                                std::optional<Chirality> chirality) {
  if (is_snub(kind)) {
    if (!chirality)
      throw MissingChirality(name_of(kind) + " requires a chirality");
    if (parent != canonical_parent(kind))
      throw UnsupportedPair("no face construction for " + name_of(kind) + " on " +
                            name_of(parent));
  } else if (chirality) {
    throw UnsupportedKind(name_of(kind) + " has no chirality");
  }

  const Polyhedron par = platonic(parent);
  const std::vector<Vec3>& V = par.vertices;
  const std::vector<std::vector<int>>& F = par.faces;

  std::optional<DivisionRule> rule;
  std::vector<double> cut;  // division params along each edge
  SnubParams sp;
  if (is_snub(kind)) {
    sp = kind == ArchimedeanKind::snub_cube ? snub_cube_params() : snub_dodec_params();
  } else {
    rule = division_rule(kind, parent);
    cut = rule->division_params();
  }
  const FacePattern pattern = rule ? rule->pattern : FacePattern::inner_polygon;

  VertexMerger merger;
  std::vector<std::vector<int>> face_pts(F.size());
  std::map<std::pair<int, int>, std::vector<int>> edge_pts;  // canonical, from min vertex

  for (std::size_t fi = 0; fi < F.size(); ++fi) {
    const std::vector<int>& f = F[fi];
    const int m = static_cast<int>(f.size());
    if (!rule) {
      // snub pattern: rotated inner polygon straight from face-local params
      std::vector<Vec3> pts;
      if (m == 4) {
        Vec3 e1 = V[f[1]] - V[f[0]], e2 = V[f[3]] - V[f[0]];
        for (Point2 q : snub_cube_face_square(sp, *chirality))
          pts.push_back(V[f[0]] + e1 * q.u + e2 * q.v);
      } else {
        Vec3 eP = V[f[1]] - V[f[0]], eR = V[f[4]] - V[f[0]];
        for (const auto& w : snub_dodec_face_pentagon(sp, *chirality))
          pts.push_back(V[f[0]] + eP * w.p + eR * w.r);
      }
      for (Vec3 p : pts) face_pts[fi].push_back(merger.add(p));
    } else if (pattern == FacePattern::corner_cut || pattern == FacePattern::midpoint) {
      for (int i = 0; i < m; ++i) {
        int a = f[i], b = f[(i + 1) % m];
        std::vector<int> ids;
        for (double t : cut) ids.push_back(merger.add(V[a] + (V[b] - V[a]) * t));
        std::pair<int, int> e{std::min(a, b), std::max(a, b)};
        if (!edge_pts.count(e)) {
          edge_pts[e] = ids;
          if (a > b) std::reverse(edge_pts[e].begin(), edge_pts[e].end());
        }
        for (int id : ids) face_pts[fi].push_back(id);
      }
    } else {
      // inner patterns: cut lines in the face plane
      Frame2 fr = face_frame(V, f);
      std::vector<Point2> c2;
      for (int i : f) c2.push_back(fr.to2(V[i]));
      auto edge_at = [&](int k, double t) {
        Point2 a = c2[((k % m) + m) % m], b = c2[((k + 1) % m + m) % m];
        return a + (b - a) * t;
      };
      // level-1 cut line parallel to edge k at the first division depth
      auto chord1 = [&](int k) {
        Point2 a = edge_at(k + 1, cut.front());
        Point2 b = edge_at(k - 1, 1.0 - cut.front());
        return std::make_pair(a, b - a);
      };
      std::vector<Point2> pts2;
      if (pattern == FacePattern::inner_polygon) {
        for (int i = 0; i < m; ++i) {
          auto [a1, d1] = chord1(i);
          auto [a2, d2] = chord1(i - 1);
          pts2.push_back(isect(a1, d1, a2, d2));
        }
      } else {
        // second-level cut lines anchor across a corner on triangle faces
        // and across a whole edge on square/pentagon faces
        const int back = m == 3 ? 1 : 2;
        const double p2 = cut[1];
        for (int k = 0; k < m; ++k) {
          auto [a1, d1] = chord1(k);
          Point2 pm = edge_at(k, p2), qm = edge_at(k - back, 1.0 - p2);
          Point2 pp = edge_at(k, 1.0 - p2), qp = edge_at(k + back, p2);
          pts2.push_back(isect(a1, d1, pm, qm - pm));
          pts2.push_back(isect(a1, d1, pp, qp - pp));
        }
      }
      for (Point2 q : pts2) face_pts[fi].push_back(merger.add(fr.to3(q)));
    }
  }

  Polyhedron out;
  out.vertices = merger.points();
  out.solid = name_of(kind);
  out.parent = name_of(parent);
  if (chirality) out.chirality = name_of(*chirality);

  // parent incidence structures
  std::map<std::pair<int, int>, std::vector<int>> pedges;  // edge -> adjacent faces
  std::map<int, std::vector<int>> vfaces;                  // vertex -> incident faces
  for (std::size_t fi = 0; fi < F.size(); ++fi) {
    for (std::size_t i = 0; i < F[fi].size(); ++i) {
      int a = F[fi][i], b = F[fi][(i + 1) % F[fi].size()];
      pedges[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(fi));
      vfaces[a].push_back(static_cast<int>(fi));
    }
  }

  auto nearest = [&](const std::vector<int>& cands, Vec3 target, int k) {
    std::vector<int> s = cands;
    std::sort(s.begin(), s.end(), [&](int i, int j) {
      return dist(out.vertices[i], target) < dist(out.vertices[j], target);
    });
    s.resize(k);
    return s;
  };

  // parent-face polygons
  for (std::size_t fi = 0; fi < F.size(); ++fi) {
    std::vector<int> ids = face_pts[fi];
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Vec3 c{};
    for (int i : ids) c = c + out.vertices[i];
    out.faces.push_back(order_cycle(out.vertices, ids, c));
  }

  if (pattern == FacePattern::corner_cut || pattern == FacePattern::midpoint) {
    // one polygon per parent vertex from the nearest division points
    for (auto& [v, fs] : vfaces) {
      std::vector<int> ids;
      for (auto& [e, adj] : pedges)
        if (e.first == v || e.second == v) ids.push_back(nearest(edge_pts[e], V[v], 1)[0]);
      out.faces.push_back(order_cycle(out.vertices, ids, V[v]));
    }
  } else {
    const int per_face = pattern == FacePattern::inner_2polygon ? 2 : 1;
    for (auto& [v, fs] : vfaces) {
      std::vector<int> ids;
      for (int fi : fs)
        for (int id : nearest(face_pts[fi], V[v], per_face)) ids.push_back(id);
      out.faces.push_back(order_cycle(out.vertices, ids, V[v]));
    }
    for (auto& [e, adj] : pedges) {
      Vec3 mid = (V[e.first] + V[e.second]) * 0.5;
      std::vector<int> ids = nearest(face_pts[adj[0]], mid, 2);
      for (int id : nearest(face_pts[adj[1]], mid, 2)) ids.push_back(id);
      std::vector<int> quad = order_cycle(out.vertices, ids, mid);
      if (!rule) {
        // snub: split the skew quad over the edge into two triangles along
        // its shorter diagonal (the actual solid edge)
        double d02 = dist(out.vertices[quad[0]], out.vertices[quad[2]]);
        double d13 = dist(out.vertices[quad[1]], out.vertices[quad[3]]);
        if (d02 < d13) {
          out.faces.push_back({quad[0], quad[1], quad[2]});
          out.faces.push_back({quad[0], quad[2], quad[3]});
        } else {
          out.faces.push_back({quad[1], quad[2], quad[3]});
          out.faces.push_back({quad[1], quad[3], quad[0]});
        }
      } else {
        out.faces.push_back(quad);
      }
    }
  }

  orient_outward(out);
  return out;
}

Polyhedron build_archimedean(ArchimedeanKind kind, std::optional<Chirality> chirality) {
  return build_archimedean_on(kind, canonical_parent(kind), chirality);
}

MetricReport metrics(const Polyhedron& poly) {
  MetricReport r;
  r.edge_min = std::numeric_limits<double>::infinity();
  for (auto [a, b] : poly.edges()) {
    double l = dist(poly.vertices[a], poly.vertices[b]);
    r.edge_min = std::min(r.edge_min, l);
    r.edge_max = std::max(r.edge_max, l);
  }
  double nmin = std::numeric_limits<double>::infinity(), nmax = 0.0;
  for (const Vec3& v : poly.vertices) {
    nmin = std::min(nmin, v.norm());
    nmax = std::max(nmax, v.norm());
  }
  r.circumdiameter = 2.0 * nmax;
  r.vertex_norm_spread = nmax - nmin;

  FaceRegularityReport freg = verify_regular_faces(poly, kGeomTol);
  r.face_regularity_error = std::max(
      {freg.max_side_spread, freg.max_radius_spread, freg.max_planarity_error});

  if (poly.solid == name_of(ArchimedeanKind::snub_cube)) {
    double q = r.circumdiameter / ((r.edge_min + r.edge_max) / 2.0);
    double q2 = q * q;
    r.wm_residual = std::abs(q2 * q2 * q2 - 10.0 * q2 * q2 + 22.0 * q2 - 14.0);
  }
  return r;
}

FaceRegularityReport verify_regular_faces(const Polyhedron& poly, double tol) {
  FaceRegularityReport rep;
  for (const auto& f : poly.faces) {
    Vec3 c = centroid(poly.vertices, f);
    Vec3 n = newell_normal(poly.vertices, f).normalized();
    double smin = std::numeric_limits<double>::infinity(), smax = 0.0;
    double rmin = smin, rmax = 0.0, plan = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      double side = dist(poly.vertices[f[i]], poly.vertices[f[(i + 1) % f.size()]]);
      double rad = dist(poly.vertices[f[i]], c);
      smin = std::min(smin, side);
      smax = std::max(smax, side);
      rmin = std::min(rmin, rad);
      rmax = std::max(rmax, rad);
      plan = std::max(plan, std::abs((poly.vertices[f[i]] - c).dot(n)));
    }
    rep.max_side_spread = std::max(rep.max_side_spread, smax - smin);
    rep.max_radius_spread = std::max(rep.max_radius_spread, rmax - rmin);
    rep.max_planarity_error = std::max(rep.max_planarity_error, plan);
  }
  rep.pass = rep.max_side_spread <= tol && rep.max_radius_spread <= tol &&
             rep.max_planarity_error <= tol;
  return rep;
}

}  // namespace archifold
