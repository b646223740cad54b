// archifold: builds the 13 Archimedean solids on the faces of their Platonic
// parents, runs the exact/numeric verification suites, and exports meshes.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "archifold/errors.hpp"
#include "archifold/facerules.hpp"
#include "archifold/foldverify.hpp"
#include "archifold/kinds.hpp"
#include "archifold/mesh_io.hpp"
#include "archifold/poly.hpp"
#include "archifold/solids.hpp"
#include "archifold/tolerances.hpp"

namespace {

using namespace archifold;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CheckLine {
  std::string name;
  double value;
  double tol;
  bool pass;
};

class CheckTable {
 public:
  void add(std::string name, double value, double tol) {
    rows_.push_back({std::move(name), value, tol, value <= tol});
  }
  void add_exact(std::string name, bool pass) {
    rows_.push_back({std::move(name), pass ? 0.0 : 1.0, 0.0, pass});
  }
  void add_lower_bound(std::string name, double value, double bound) {
    rows_.push_back({std::move(name), value, bound, value >= bound});
  }
  void add_trace(const FoldTrace& t) {
    for (const auto& c : t.checks) {
      bool pass = c.passed();
      rows_.push_back({t.name + ": " + c.name, c.value, c.tol, pass});
    }
  }
  bool all_pass() const {
    for (const auto& r : rows_)
      if (!r.pass) return false;
    return true;
  }
  void print(std::ostream& os) const {
    for (const auto& r : rows_) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-58s %12.3e  (tol %8.1e)  %s\n", r.name.c_str(),
                    r.value, r.tol, r.pass ? "pass" : "FAIL");
      os << buf;
    }
    os << (all_pass() ? "all checks passed\n" : "CHECKS FAILED\n");
  }

 private:
  std::vector<CheckLine> rows_;
};

std::optional<Polyhedron> build_named(const std::string& name,
                                      std::optional<Chirality> chirality) {
  if (auto p = parse_platonic(name)) {
    if (chirality) throw UnsupportedKind(name + " has no chirality");
    return platonic(*p);
  }
  if (auto a = parse_archimedean(name)) return build_archimedean(*a, chirality);
  return std::nullopt;
}

void mesh_checks_into(CheckTable& table, const std::string& name, const Polyhedron& poly,
                      double tol) {
  MeshChecks mc = mesh_checks(poly);
  MetricReport mr = metrics(poly);
  table.add_exact(name + ": closed two-manifold", mc.two_manifold);
  table.add_exact(name + ": euler characteristic 2", mc.euler_characteristic == 2);
  table.add_lower_bound(name + ": vertex separation", mc.min_vertex_separation, kMergeTol);
  table.add(name + ": vertex norm spread", mr.vertex_norm_spread, tol);
  table.add(name + ": face regularity", mr.face_regularity_error, tol);
  table.add(name + ": edge uniformity", mr.edge_max / mr.edge_min - 1.0, tol);
  if (mr.wm_residual)
    table.add(name + ": circumdiameter/edge sextic", *mr.wm_residual, 1e-6);
}

void snub_params_into(CheckTable& table, const std::string& name, const SnubParams& sp,
                      double tol) {
  for (const auto& [key, value] : sp.residuals) table.add(name + ": " + key, value, tol);
}

int cmd_verify(const std::string& scope, double tol) {
  CheckTable table;
  const bool all = scope == "all";

  if (all || scope == "identities" || scope == "appendix") {
    IdentityReport rep = verify_ratio_identities();
    for (const auto& it : rep.items) table.add_exact("identity: " + it.name, it.pass);
  }
  if (all || scope == "folds") {
    try {
      for (const FoldTrace& t : {snub_cube_fold_trace(), verify_dodec_fold(), final_fold_to_A1()})
        table.add_trace(t);
    } catch (const VerificationFailed& e) {
      std::cout << "verification failed: " << e.what() << "\n";
      return kExitCheckFailed;
    }
  }
  if (all || scope == "snub-cube") {
    SnubParams sp = snub_cube_params();
    std::printf("snub-cube: x = %.10f, y = %.10f\n", sp.x, sp.y);
    snub_params_into(table, "snub-cube", sp, kRootTol);
  }
  if (all || scope == "snub-dodecahedron") {
    SnubParams sp = snub_dodec_params();
    std::printf("snub-dodecahedron: x = %.10f, y = %.10f\n", sp.x, sp.y);
    snub_params_into(table, "snub-dodecahedron", sp, 1e-10);
  }

  if (all) {
    for (ArchimedeanKind k : all_archimedean()) {
      auto chir = is_snub(k) ? std::optional<Chirality>(Chirality::right) : std::nullopt;
      mesh_checks_into(table, name_of(k), build_archimedean(k, chir), tol);
    }
  } else if (scope != "identities" && scope != "appendix" && scope != "folds") {
    std::optional<Chirality> chir;
    if (auto a = parse_archimedean(scope); a && is_snub(*a)) chir = Chirality::right;
    auto poly = build_named(scope, chir);
    if (!poly) {
      std::cerr << "unknown verify scope: " << scope << "\n";
      return kExitUsage;
    }
    mesh_checks_into(table, scope, *poly, tol);
  }

  table.print(std::cout);
  return table.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_roots(const std::string& solid) {
  SnubParams sp;
  double tol;
  if (solid == "snub-cube") {
    sp = snub_cube_params();
    tol = kRootTol;
  } else if (solid == "snub-dodecahedron") {
    sp = snub_dodec_params();
    tol = 1e-10;
  } else {
    std::cerr << "roots: expected snub-cube or snub-dodecahedron\n";
    return kExitUsage;
  }
  std::printf("x = %.10f, y = %.10f\n", sp.x, sp.y);
  bool ok = true;
  for (const auto& [name, value] : sp.residuals) {
    std::printf("%-18s %12.3e  (tol %8.1e)\n", name.c_str(), value, tol);
    ok = ok && value <= tol;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

nlohmann::ordered_json trace_to_json(const FoldTrace& t) {
  nlohmann::ordered_json j;
  j["name"] = t.name;
  auto& inputs = j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [name, p] : t.input_points) inputs[name] = {p.u, p.v};
  for (const auto& [name, l] : t.input_lines)
    inputs[name] = {{"normal", {l.n.u, l.n.v}}, {"offset", l.d}};
  j["crease"] = {{"normal", {t.crease.line.n.u, t.crease.line.n.v}},
                 {"offset", t.crease.line.d}};
  if (t.crease.slope_intercept)
    j["crease"]["slope_intercept"] = {t.crease.slope_intercept->first,
                                      t.crease.slope_intercept->second};
  auto& imgs = j["images"] = nlohmann::ordered_json::array();
  for (const Point2& p : t.images) imgs.push_back({p.u, p.v});
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : t.checks)
    checks.push_back({{"name", c.name}, {"value", c.value}, {"tol", c.tol},
                      {"pass", c.passed()}});
  j["passed"] = t.passed();
  return j;
}

int cmd_fold_trace(const std::string& solid, const std::string& out_path) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  try {
    if (solid.empty() || solid == "snub-cube") j.push_back(trace_to_json(snub_cube_fold_trace()));
    if (solid.empty() || solid == "snub-dodecahedron") {
      j.push_back(trace_to_json(verify_dodec_fold()));
      j.push_back(trace_to_json(final_fold_to_A1()));
    }
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  if (j.empty()) {
    std::cerr << "fold-trace: expected snub-cube or snub-dodecahedron\n";
    return kExitUsage;
  }
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "cannot open " << out_path << "\n";
      return kExitIo;
    }
    os << j.dump(2) << "\n";
    if (!os.good()) return kExitIo;
  }
  return kExitOk;
}

int cmd_generate(const std::string& solid, const std::string& chirality_name,
                 const std::string& format, const std::string& out_path, bool list) {
  if (list) {
    for (PlatonicKind k : all_platonic()) std::cout << name_of(k) << "\n";
    for (ArchimedeanKind k : all_archimedean()) std::cout << name_of(k) << "\n";
    return kExitOk;
  }
  if (solid.empty()) {
    std::cerr << "generate: missing solid name (try --list)\n";
    return kExitUsage;
  }
  std::optional<Chirality> chir;
  if (!chirality_name.empty()) {
    chir = parse_chirality(chirality_name);
    if (!chir) {
      std::cerr << "unknown chirality: " << chirality_name << "\n";
      return kExitUsage;
    }
  }

  MeshDocument doc;
  try {
    auto poly = build_named(solid, chir);
    if (!poly) {
      std::cerr << "unknown solid: " << solid << " (try --list)\n";
      return kExitUsage;
    }
    doc = MeshDocument::of(*poly);
  } catch (const MissingChirality& e) {
    std::cerr << e.what() << " (use --chirality left|right)\n";
    return kExitUsage;
  } catch (const UnsupportedKind& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream body;
  if (format == "obj")
    write_obj(body, doc);
  else
    write_json(body, doc);

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "cannot open " << out_path << "\n";
      return kExitIo;
    }
    os << body.str();
    os.flush();
    if (!os.good()) {
      std::cerr << "write failed: " << out_path << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Archimedean solids from face constructions on Platonic parents"};
  app.require_subcommand(1);

  std::string solid, chirality, format = "obj", out_path, scope = "all";
  bool list = false;

  CLI::App* gen = app.add_subcommand("generate", "build a solid and write a mesh file");
  gen->add_option("solid", solid, "solid name (see --list)");
  gen->add_option("--chirality", chirality, "left or right (snub solids only)");
  gen->add_option("--format", format, "obj or json")
      ->check(CLI::IsMember({"obj", "json"}));
  gen->add_option("-o,--output", out_path, "output path (default: stdout)");
  gen->add_flag("--list", list, "list the recognized solid names");

  CLI::App* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("scope", scope,
                  "all, identities, folds, or a solid name");
  double tol = kGeomTol;
  ver->add_option("--tol", tol, "geometric tolerance for mesh checks")
      ->check(CLI::PositiveNumber);

  CLI::App* roots = app.add_subcommand("roots", "print the snub placement parameters");
  std::string roots_solid;
  roots->add_option("solid", roots_solid, "snub-cube or snub-dodecahedron")->required();

  CLI::App* trace = app.add_subcommand("fold-trace", "emit fold verification traces as JSON");
  std::string trace_solid;
  trace->add_option("solid", trace_solid, "snub-cube or snub-dodecahedron (default: both)");
  trace->add_option("-o,--output", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(solid, chirality, format, out_path, list);
    if (ver->parsed()) return cmd_verify(scope, tol);
    if (roots->parsed()) return cmd_roots(roots_solid);
    if (trace->parsed()) return cmd_fold_trace(trace_solid, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
