#include "platonic/catalog.hpp"

#include <doctest.h>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <variant>

#include "platonic/automorphisms.hpp"
#include "platonic/errors.hpp"
#include "platonic/unfolding.hpp"

using platonic::TiledSurface;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("catalog entries are valid, rotary, and match their expected data") {
  for (const auto& entry : platonic::builtin_catalog()) {
    CAPTURE(entry.name);
    CHECK(platonic::validate(entry.surface).ok());
    CHECK(platonic::is_rotary(entry.surface));
    if (!entry.expected) continue;
    const auto symbol = platonic::schlafli(entry.surface);
    REQUIRE(std::holds_alternative<platonic::SchlafliSymbol>(symbol));
    CHECK(std::get<platonic::SchlafliSymbol>(symbol) == entry.expected->symbol);
    CHECK(platonic::genus(entry.surface) == entry.expected->genus);
    CHECK(platonic::rotation_group(entry.surface).order() == entry.expected->rot_order);
  }
}

TEST_CASE("platonic_solid rejects unknown names") {
  CHECK_THROWS_AS(platonic::platonic_solid("hexahedron"), platonic::UnknownNameError);
}

TEST_CASE("bolza face adjacency matches the sheet-shift data") {
  const auto surface = platonic::bolza();
  const std::vector<int> first_row{4, 3, 2, 5, 4, 3, 2, 5};
  for (int a = 0; a < 8; ++a) CHECK(surface.adjacent(0, a).face == first_row[a]);

  // The cocycle reproduces every tabulated shift (also checked at build).
  const auto rho = platonic::cocycle(surface);
  const auto& shifts = platonic::bolza_sheet_shifts();
  for (int f = 0; f < 6; ++f)
    for (int a = 0; a < 8; ++a)
      CHECK(rho.at(f, a) == ((2 * shifts[f][a]) % 16 + 16) % 16);
}

TEST_CASE("pi_p family") {
  const auto pi4 = platonic::pi_p(4);
  CHECK(pi4.face_count() == 1);
  CHECK(platonic::genus(pi4) == 1);

  const auto pi5 = platonic::pi_p(5);
  CHECK(pi5.face_count() == 2);
  CHECK(platonic::genus(pi5) == 2);

  const auto pi8 = platonic::pi_p(8);
  CHECK(pi8.face_count() == 1);
  CHECK(platonic::genus(pi8) == 2);

  CHECK_THROWS_AS(platonic::pi_p(2), platonic::InvalidSizeError);
}

TEST_CASE("torus maps") {
  CHECK(platonic::torus_map(4, 1) == platonic::pi_p(4));

  const auto grid = platonic::torus_map(4, 2);
  CHECK(grid.face_count() == 4);
  CHECK(platonic::genus(grid) == 1);
  CHECK(platonic::is_rotary(grid));

  const auto hex2 = platonic::torus_map(6, 2);
  CHECK(hex2.face_count() == 2);
  CHECK(platonic::genus(hex2) == 1);
  const auto symbol = platonic::schlafli(hex2);
  REQUIRE(std::holds_alternative<platonic::SchlafliSymbol>(symbol));
  CHECK(std::get<platonic::SchlafliSymbol>(symbol) == platonic::SchlafliSymbol(6, 3));
  CHECK(platonic::k_prime(platonic::SchlafliSymbol(6, 3)) == 1);

  CHECK_THROWS_AS(platonic::torus_map(5, 1), platonic::InvalidSizeError);
  CHECK_THROWS_AS(platonic::torus_map(4, 0), platonic::InvalidSizeError);
}

TEST_CASE("surface JSON round trip") {
  const auto cube = platonic::platonic_solid("cube");
  const auto path = temp_file("platonic_test_cube.json");
  platonic::save_surface(cube, path);
  const auto loaded = platonic::load_surface(path);
  CHECK(loaded == cube);

  // Canonical text is a fixed point of save(load(.)).
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == platonic::canonical_surface_text(loaded));
  std::filesystem::remove(path);
}

TEST_CASE("load reports parse errors") {
  const auto path = temp_file("platonic_test_truncated.json");
  std::ofstream(path) << "{ \"p\": 4, \"faces\": 1, \"adj\": [[[0,2],[0,3]";
  CHECK_THROWS_AS(platonic::load_surface(path), platonic::ParseError);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(platonic::load_surface(temp_file("platonic_no_such_file.json")),
                  platonic::ParseError);
}

TEST_CASE("load reports validation errors with the violated invariant") {
  const auto path = temp_file("platonic_test_selfglue.json");
  std::ofstream(path) << R"({"p":4,"faces":1,"adj":[[[0,0],[0,3],[0,2],[0,1]]]})";
  try {
    platonic::load_surface(path);
    FAIL("expected ValidationError");
  } catch (const platonic::ValidationError& e) {
    CHECK(e.invariant() == "self_glued_slot");
    CHECK(e.face() == 0);
    CHECK(e.slot() == 0);
  }
  std::filesystem::remove(path);
}

TEST_CASE("slot relabelling does not change the computed groups") {
  const auto cube = platonic::platonic_solid("cube");
  const int p = cube.polygon_sides();
  // Rotate every face's slot labels by a face-dependent offset; the result
  // is the same map with a different slot convention.
  std::vector<std::vector<platonic::Pair>> adjacency(cube.face_count(),
                                                     std::vector<platonic::Pair>(p));
  auto offset = [&](int face) { return face % p; };
  for (int f = 0; f < cube.face_count(); ++f) {
    for (int a = 0; a < p; ++a) {
      const auto target = cube.adjacent(f, a);
      adjacency[f][(a + offset(f)) % p] = {target.face, (target.slot + offset(target.face)) % p};
    }
  }
  const TiledSurface relabelled(p, std::move(adjacency));
  CHECK(platonic::validate(relabelled).ok());
  CHECK(platonic::rotation_group(relabelled).order() == 24);
  CHECK(platonic::monodromy_group(platonic::unfold(relabelled)).order() == 24);
  CHECK(platonic::find_isomorphism(relabelled, cube).has_value());
}
