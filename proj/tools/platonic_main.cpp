// Command-line front end: catalog listing, surface info, unfolding,
// monodromy and rotation group orders, and the structural verification
// report.  Exit codes: 0 success / all checks pass, 2 usage or input error,
// 3 verification found a failed flag.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "platonic/automorphisms.hpp"
#include "platonic/catalog.hpp"
#include "platonic/errors.hpp"
#include "platonic/surface.hpp"
#include "platonic/unfolding.hpp"
#include "platonic/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitCheckFailed = 3;

struct SurfaceArgs {
  std::string name;
  std::string file;
  std::string format = "text";
  bool generators = false;
};

bool json_output(const SurfaceArgs& args) { return args.format == "json"; }

void add_surface_options(CLI::App* cmd, SurfaceArgs& args, bool with_generators = false) {
  cmd->add_option("name", args.name, "catalog surface name");
  cmd->add_option("--file", args.file, "load the surface from a JSON file");
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  if (with_generators)
    cmd->add_flag("--generators", args.generators, "print generators in cycle notation");
}

std::optional<std::filesystem::path> catalog_dir() {
  const char* dir = std::getenv("PLATONIC_CATALOG_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

platonic::TiledSurface resolve_surface(const SurfaceArgs& args) {
  if (args.name.empty() == args.file.empty())
    throw platonic::UnknownNameError("give exactly one of a catalog name or --file PATH");
  if (!args.file.empty()) return platonic::load_surface(args.file);
  if (const auto* entry = platonic::find_builtin(args.name)) return entry->surface;
  if (const auto dir = catalog_dir()) {
    const auto path = *dir / (args.name + ".json");
    if (std::filesystem::exists(path)) return platonic::load_surface(path);
  }
  throw platonic::UnknownNameError("unknown catalog surface: " + args.name);
}

nlohmann::json info_json(const platonic::TiledSurface& surface) {
  nlohmann::json value{{"p", surface.polygon_sides()},
                       {"faces", surface.face_count()},
                       {"edges", surface.pair_count() / 2},
                       {"vertices", platonic::vertex_orbits(surface).size()},
                       {"euler_characteristic", platonic::euler_characteristic(surface)},
                       {"genus", platonic::genus(surface)},
                       {"rotary", platonic::is_rotary(surface)}};
  const auto symbol = platonic::schlafli(surface);
  if (const auto* s = std::get_if<platonic::SchlafliSymbol>(&symbol)) {
    value["regular"] = true;
    value["q"] = s->q;
  } else {
    value["regular"] = false;
    value["vertex_degrees"] = std::get<platonic::NotRegular>(symbol).vertex_degrees;
  }
  return value;
}

int run_info(const SurfaceArgs& args) {
  const auto surface = resolve_surface(args);
  if (json_output(args)) {
    std::cout << info_json(surface).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "p: " << surface.polygon_sides() << "\n";
  const auto symbol = platonic::schlafli(surface);
  if (const auto* s = std::get_if<platonic::SchlafliSymbol>(&symbol)) {
    std::cout << "q: " << s->q << "\n";
  } else {
    std::cout << "q: - (vertex degrees:";
    for (int degree : std::get<platonic::NotRegular>(symbol).vertex_degrees)
      std::cout << " " << degree;
    std::cout << ")\n";
  }
  std::cout << "faces: " << surface.face_count() << "\n";
  std::cout << "edges: " << surface.pair_count() / 2 << "\n";
  std::cout << "vertices: " << platonic::vertex_orbits(surface).size() << "\n";
  std::cout << "euler_characteristic: " << platonic::euler_characteristic(surface) << "\n";
  std::cout << "genus: " << platonic::genus(surface) << "\n";
  std::cout << "rotary: " << (platonic::is_rotary(surface) ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_unfold(const SurfaceArgs& args) {
  const auto unfolding = platonic::unfold(resolve_surface(args));
  if (json_output(args)) {
    std::cout << nlohmann::json{{"k", unfolding.degree()}, {"n", unfolding.sheet_count()}}.dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << "k: " << unfolding.degree() << "\n";
  std::cout << "sheets: " << unfolding.sheet_count() << "\n";
  return kExitOk;
}

int run_monodromy(const SurfaceArgs& args) {
  const auto unfolding = platonic::unfold(resolve_surface(args));
  const auto generators = platonic::monodromy_generators(unfolding);
  const auto group = platonic::monodromy_group(unfolding);
  if (json_output(args)) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators) gens.push_back(g.to_cycle_string());
    std::cout << nlohmann::json{{"k", unfolding.degree()},
                                {"n", unfolding.sheet_count()},
                                {"order", group.order()},
                                {"generators", std::move(gens)}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << "order: " << group.order() << "\n";
  std::cout << "sheets: " << unfolding.sheet_count() << "\n";
  std::cout << "generators: " << generators.size() << "\n";
  if (args.generators) {
    for (std::size_t i = 0; i < generators.size(); ++i)
      std::cout << "gen " << i << ": " << generators[i].to_cycle_string() << "\n";
  }
  return kExitOk;
}

int run_rot(const SurfaceArgs& args) {
  const auto group = platonic::rotation_group(resolve_surface(args));
  if (json_output(args)) {
    std::cout << nlohmann::json{{"order", group.order()}, {"degree", group.degree()}}.dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << "order: " << group.order() << "\n";
  return kExitOk;
}

int run_verify_one(const platonic::TiledSurface& surface, const std::string& label,
                   bool as_json) {
  const auto report = platonic::full_report(surface);
  if (as_json) {
    nlohmann::json value = platonic::report_to_json(report);
    if (!label.empty()) value["name"] = label;
    std::cout << value.dump(2) << "\n";
  } else {
    if (!label.empty()) std::cout << "surface: " << label << "\n";
    std::cout << platonic::report_to_text(report);
  }
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int run_verify(const SurfaceArgs& args, bool all) {
  if (!all) return run_verify_one(resolve_surface(args), args.name, json_output(args));

  if (json_output(args)) {
    nlohmann::json list = nlohmann::json::array();
    int exit_code = kExitOk;
    for (const auto& entry : platonic::builtin_catalog()) {
      const auto report = platonic::full_report(entry.surface);
      nlohmann::json value = platonic::report_to_json(report);
      value["name"] = entry.name;
      list.push_back(std::move(value));
      if (!report.all_pass()) exit_code = kExitCheckFailed;
    }
    std::cout << list.dump(2) << "\n";
    return exit_code;
  }

  int exit_code = kExitOk;
  bool first = true;
  for (const auto& entry : platonic::builtin_catalog()) {
    if (!first) std::cout << "\n";
    first = false;
    const int code = run_verify_one(entry.surface, entry.name, /*as_json=*/false);
    if (code != kExitOk) exit_code = code;
  }
  return exit_code;
}

int run_catalog(const SurfaceArgs& args) {
  struct Row {
    std::string name;
    platonic::TiledSurface surface;
  };
  std::vector<Row> rows;
  for (const auto& entry : platonic::builtin_catalog()) rows.push_back({entry.name, entry.surface});
  if (const auto dir = catalog_dir()) {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_directory(*dir))
      for (const auto& item : std::filesystem::directory_iterator(*dir))
        if (item.path().extension() == ".json") files.push_back(item.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) rows.push_back({path.stem().string(), platonic::load_surface(path)});
  }

  if (json_output(args)) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& row : rows) {
      const auto symbol = platonic::schlafli(row.surface);
      const auto* s = std::get_if<platonic::SchlafliSymbol>(&symbol);
      list.push_back(nlohmann::json{{"name", row.name},
                                    {"p", row.surface.polygon_sides()},
                                    {"q", s ? s->q : 0},
                                    {"faces", row.surface.face_count()},
                                    {"genus", platonic::genus(row.surface)}});
    }
    std::cout << list.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& row : rows) {
    const auto symbol = platonic::schlafli(row.surface);
    const auto* s = std::get_if<platonic::SchlafliSymbol>(&symbol);
    std::cout << row.name << " {" << row.surface.polygon_sides() << "," << (s ? s->q : 0)
              << "} faces=" << row.surface.face_count()
              << " genus=" << platonic::genus(row.surface) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular-map surfaces: gluings, unfoldings, monodromy and rotation groups"};
  app.require_subcommand(1);

  SurfaceArgs catalog_args;
  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in surfaces");
  catalog_cmd->add_option("--format", catalog_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  SurfaceArgs info_args;
  add_surface_options(app.add_subcommand("info", "symbol, counts, genus and rotary flag"),
                      info_args);
  SurfaceArgs unfold_args;
  add_surface_options(app.add_subcommand("unfold", "cover degree k and sheet count"),
                      unfold_args);
  SurfaceArgs mon_args;
  add_surface_options(app.add_subcommand("monodromy", "monodromy group of the covering"),
                      mon_args, /*with_generators=*/true);
  SurfaceArgs rot_args;
  add_surface_options(app.add_subcommand("rot", "rotation group order"), rot_args);
  SurfaceArgs verify_args;
  bool verify_all = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "run every structural check and report pass/fail");
  add_surface_options(verify_cmd, verify_args);
  verify_cmd->add_flag("--all", verify_all, "verify every catalog surface");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (catalog_cmd->parsed()) return run_catalog(catalog_args);
    if (app.get_subcommand("info")->parsed()) return run_info(info_args);
    if (app.get_subcommand("unfold")->parsed()) return run_unfold(unfold_args);
    if (app.get_subcommand("monodromy")->parsed()) return run_monodromy(mon_args);
    if (app.get_subcommand("rot")->parsed()) return run_rot(rot_args);
    if (verify_cmd->parsed()) {
      if (verify_all && (!verify_args.name.empty() || !verify_args.file.empty())) {
        std::cerr << "error: --all takes no surface argument\n";
        return kExitInputError;
      }
      return run_verify(verify_args, verify_all);
    }
  } catch (const platonic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
