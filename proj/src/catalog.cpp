#include "platonic/catalog.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "platonic/errors.hpp"
#include "platonic/unfolding.hpp"

namespace platonic {

namespace {

int mod(int value, int modulus) {
  int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

void require_valid(const TiledSurface& surface, const std::string& who) {
  const auto result = validate(surface);
  detail::check(result.ok(), who + " constructs a valid surface: " + result.message);
}

}  // namespace

TiledSurface surface_from_oriented_faces(int p, const std::vector<std::vector<int>>& faces) {
  std::map<std::pair<int, int>, Pair> slot_of_directed_edge;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (static_cast<int>(faces[f].size()) != p)
      throw std::invalid_argument("face vertex cycle has the wrong length");
    for (int a = 0; a < p; ++a) {
      const std::pair<int, int> edge{faces[f][a], faces[f][(a + 1) % p]};
      if (slot_of_directed_edge.count(edge))
        throw std::invalid_argument("directed edge appears twice; faces are not consistently oriented");
      slot_of_directed_edge[edge] = {static_cast<int>(f), a};
    }
  }
  std::vector<std::vector<Pair>> adjacency(faces.size(), std::vector<Pair>(p));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int a = 0; a < p; ++a) {
      const auto reverse = slot_of_directed_edge.find({faces[f][(a + 1) % p], faces[f][a]});
      if (reverse == slot_of_directed_edge.end())
        throw std::invalid_argument("directed edge lacks its reverse; surface is not closed");
      adjacency[f][a] = reverse->second;
    }
  }
  return TiledSurface(p, std::move(adjacency));
}

TiledSurface platonic_solid(std::string_view name) {
  // Vertex cycles per face, consistently oriented so every directed edge
  // occurs exactly once.
  static const std::vector<std::vector<int>> tetrahedron{
      {0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {3, 2, 1}};
  static const std::vector<std::vector<int>> cube{
      {0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
  static const std::vector<std::vector<int>> octahedron{
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
      {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
  static const std::vector<std::vector<int>> dodecahedron{
      {0, 1, 12, 5, 15}, {1, 0, 14, 6, 13}, {2, 3, 19, 4, 16}, {3, 2, 17, 7, 18},
      {0, 15, 9, 8, 14}, {8, 9, 19, 3, 18}, {12, 1, 13, 10, 11}, {11, 10, 17, 2, 16},
      {5, 12, 11, 16, 4}, {5, 4, 19, 9, 15}, {7, 17, 10, 13, 6}, {14, 8, 18, 7, 6}};
  static const std::vector<std::vector<int>> icosahedron{
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
      {2, 1, 6}, {3, 2, 7}, {4, 3, 8}, {5, 4, 9}, {1, 5, 10},
      {6, 7, 2}, {7, 8, 3}, {8, 9, 4}, {9, 10, 5}, {10, 6, 1},
      {7, 6, 11}, {8, 7, 11}, {9, 8, 11}, {10, 9, 11}, {6, 10, 11}};

  TiledSurface surface = [&] {
    if (name == "tetrahedron") return surface_from_oriented_faces(3, tetrahedron);
    if (name == "cube") return surface_from_oriented_faces(4, cube);
    if (name == "octahedron") return surface_from_oriented_faces(3, octahedron);
    if (name == "dodecahedron") return surface_from_oriented_faces(5, dodecahedron);
    if (name == "icosahedron") return surface_from_oriented_faces(3, icosahedron);
    throw UnknownNameError("unknown Platonic solid: " + std::string(name));
  }();
  require_valid(surface, std::string(name));
  return surface;
}

const std::vector<std::vector<int>>& bolza_sheet_shifts() {
  // Sheet shift across each slot of each octagon; parallel slots a and a+4
  // carry the same shift and meet the same neighbouring octagon.
  static const std::vector<std::vector<int>> shifts{
      {0, -1, -4, 2, 0, -1, -4, 2},
      {0, 1, 0, 0, 0, 1, 0, 0},
      {0, -1, -4, 2, 0, -1, -4, 2},
      {-1, -2, 1, 0, -1, -2, 1, 0},
      {0, 1, 0, 0, 0, 1, 0, 0},
      {-1, -2, 1, 0, -1, -2, 1, 0}};
  return shifts;
}

TiledSurface bolza() {
  static const std::vector<std::vector<int>> neighbour{
      {4, 3, 2, 5, 4, 3, 2, 5},
      {2, 3, 4, 5, 2, 3, 4, 5},
      {1, 5, 0, 3, 1, 5, 0, 3},
      {1, 2, 0, 4, 1, 2, 0, 4},
      {0, 5, 1, 3, 0, 5, 1, 3},
      {4, 0, 2, 1, 4, 0, 2, 1}};
  const auto& shifts = bolza_sheet_shifts();

  // A shift of s across slot a forces the far slot b: the cocycle value is
  // 2(a - b) - 8 = 2s mod 16, so b = a - s - 4 mod 8.
  std::vector<std::vector<Pair>> adjacency(6, std::vector<Pair>(8));
  for (int f = 0; f < 6; ++f)
    for (int a = 0; a < 8; ++a)
      adjacency[f][a] = {neighbour[f][a], mod(a - shifts[f][a] - 4, 8)};
  TiledSurface surface(8, std::move(adjacency));
  require_valid(surface, "bolza");

  const RotationCocycle rho = cocycle(surface);
  for (int f = 0; f < 6; ++f)
    for (int a = 0; a < 8; ++a)
      detail::check(rho.at(f, a) == mod(2 * shifts[f][a], 16),
                    "Bolza cocycle reproduces the sheet shifts");
  return surface;
}

TiledSurface pi_p(int p) {
  if (p < 3) throw InvalidSizeError("pi_p needs p >= 3");
  TiledSurface surface = [&] {
    if (p % 2 == 0) {
      std::vector<std::vector<Pair>> adjacency(1, std::vector<Pair>(p));
      for (int a = 0; a < p; ++a) adjacency[0][a] = {0, (a + p / 2) % p};
      return TiledSurface(p, std::move(adjacency));
    }
    std::vector<std::vector<Pair>> adjacency(2, std::vector<Pair>(p));
    for (int a = 0; a < p; ++a) {
      adjacency[0][a] = {1, a};
      adjacency[1][a] = {0, a};
    }
    return TiledSurface(p, std::move(adjacency));
  }();
  require_valid(surface, "pi_p");

  const RotationCocycle rho = cocycle(surface);
  for (int f = 0; f < surface.face_count(); ++f) {
    for (int a = 0; a < p; ++a) {
      // Even p: translation gluings, class 0.  Odd p: every crossing is a
      // half turn, and closed loops cross between the two polygons an even
      // number of times, so loop holonomy still vanishes.
      detail::check(rho.at(f, a) == (p % 2 == 0 ? 0 : p), "pi_p crossings have trivial holonomy");
    }
  }
  return surface;
}

TiledSurface torus_map(int p, int size) {
  if (size < 1) throw InvalidSizeError("torus size must be positive");
  if (p == 4) {
    const int n = size;
    auto face = [&](int x, int y) { return mod(x, n) * n + mod(y, n); };
    std::vector<std::vector<Pair>> adjacency(n * n, std::vector<Pair>(4));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        adjacency[face(x, y)][0] = {face(x, y - 1), 2};
        adjacency[face(x, y)][1] = {face(x + 1, y), 3};
        adjacency[face(x, y)][2] = {face(x, y + 1), 0};
        adjacency[face(x, y)][3] = {face(x - 1, y), 1};
      }
    }
    TiledSurface surface(4, std::move(adjacency));
    require_valid(surface, "torus_map(4)");
    return surface;
  }
  if (p == 6) {
    // Honeycomb quotient by the lattice <size * e1, e2>: crossing slots
    // 0..5 moves by +e1, +e2, e2-e1, -e1, -e2, e1-e2 and always enters the
    // neighbour through the opposite slot.
    static const std::array<int, 6> dx{1, 0, -1, -1, 0, 1};
    const int m = size;
    std::vector<std::vector<Pair>> adjacency(m, std::vector<Pair>(6));
    for (int f = 0; f < m; ++f)
      for (int a = 0; a < 6; ++a)
        adjacency[f][a] = {mod(f + dx[a], m), (a + 3) % 6};
    TiledSurface surface(6, std::move(adjacency));
    require_valid(surface, "torus_map(6)");
    return surface;
  }
  throw InvalidSizeError("torus_map supports p = 4 and p = 6");
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> entries;
    auto add = [&](std::string name, TiledSurface surface,
                   std::optional<CatalogExpected> expected = std::nullopt) {
      entries.push_back({std::move(name), std::move(surface), expected});
    };
    add("tetrahedron", platonic_solid("tetrahedron"),
        CatalogExpected{SchlafliSymbol(3, 3), 0, 12});
    add("cube", platonic_solid("cube"), CatalogExpected{SchlafliSymbol(4, 3), 0, 24});
    add("octahedron", platonic_solid("octahedron"),
        CatalogExpected{SchlafliSymbol(3, 4), 0, 24});
    add("dodecahedron", platonic_solid("dodecahedron"),
        CatalogExpected{SchlafliSymbol(5, 3), 0, 60});
    add("icosahedron", platonic_solid("icosahedron"),
        CatalogExpected{SchlafliSymbol(3, 5), 0, 60});
    add("bolza", bolza(), CatalogExpected{SchlafliSymbol(8, 3), 2, 48});
    for (int p = 3; p <= 12; ++p) add("pi_" + std::to_string(p), pi_p(p));
    add("square_torus_2", torus_map(4, 2), CatalogExpected{SchlafliSymbol(4, 4), 1, 16});
    return entries;
  }();
  return catalog;
}

const CatalogEntry* find_builtin(std::string_view name) {
  for (const auto& entry : builtin_catalog())
    if (entry.name == name) return &entry;
  return nullptr;
}

nlohmann::json surface_to_json(const TiledSurface& surface) {
  nlohmann::json adj = nlohmann::json::array();
  for (int f = 0; f < surface.face_count(); ++f) {
    nlohmann::json row = nlohmann::json::array();
    for (int a = 0; a < surface.polygon_sides(); ++a) {
      const Pair target = surface.adjacent(f, a);
      row.push_back(nlohmann::json::array({target.face, target.slot}));
    }
    adj.push_back(std::move(row));
  }
  return nlohmann::json{{"p", surface.polygon_sides()},
                        {"faces", surface.face_count()},
                        {"adj", std::move(adj)}};
}

TiledSurface surface_from_json(const nlohmann::json& value) {
  if (!value.is_object() || !value.contains("p") || !value.contains("faces") ||
      !value.contains("adj"))
    throw ParseError("surface JSON needs the keys \"p\", \"faces\" and \"adj\"");
  if (!value["p"].is_number_integer() || !value["faces"].is_number_integer() ||
      !value["adj"].is_array())
    throw ParseError("surface JSON has wrongly typed fields");
  const int p = value["p"].get<int>();
  const int m = value["faces"].get<int>();
  if (p < 3) throw ParseError("surface JSON needs p >= 3");
  if (m < 1) throw ParseError("surface JSON needs at least one face");
  if (static_cast<int>(value["adj"].size()) != m)
    throw ParseError("surface JSON: \"adj\" must have exactly \"faces\" rows");

  // Validate row shapes before allocating, so memory stays proportional to
  // the file content even for absurd header values.
  std::vector<std::vector<Pair>> adjacency;
  adjacency.reserve(m);
  for (int f = 0; f < m; ++f) {
    const auto& row = value["adj"][f];
    if (!row.is_array() || static_cast<int>(row.size()) != p)
      throw ParseError("surface JSON: every \"adj\" row needs exactly p entries");
    std::vector<Pair> slots;
    slots.reserve(p);
    for (int a = 0; a < p; ++a) {
      const auto& cell = row[a];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
          !cell[1].is_number_integer())
        throw ParseError("surface JSON: adjacency entries are [face, slot] integer pairs");
      slots.push_back({cell[0].get<int>(), cell[1].get<int>()});
    }
    adjacency.push_back(std::move(slots));
  }

  TiledSurface surface(p, std::move(adjacency));
  const auto result = validate(surface);
  if (!result.ok())
    throw ValidationError(to_string(result.issue), result.face, result.slot, result.message);
  return surface;
}

std::string canonical_surface_text(const TiledSurface& surface) {
  return surface_to_json(surface).dump(2) + "\n";
}

TiledSurface load_surface(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return surface_from_json(value);
}

void save_surface(const TiledSurface& surface, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << canonical_surface_text(surface);
}

}  // namespace platonic
