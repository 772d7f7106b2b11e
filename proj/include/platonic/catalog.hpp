#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "platonic/surface.hpp"

namespace platonic {

/// Surface built from per-face vertex cycles: slot a of a face runs from
/// its vertex a to vertex a+1.  Every directed edge must occur exactly once
/// with its reverse present, i.e. the face lists are consistently oriented.
TiledSurface surface_from_oriented_faces(int p, const std::vector<std::vector<int>>& faces);

/// One of tetrahedron, cube, octahedron, dodecahedron, icosahedron.
/// Throws UnknownNameError otherwise.
TiledSurface platonic_solid(std::string_view name);

/// The genus-2 surface tiled by six octagons, three around every vertex.
/// The slot gluing is completed from the face adjacency and sheet-shift
/// data so that the rotation cocycle reproduces those shifts exactly;
/// construction re-checks this and refuses to return a surface that fails.
TiledSurface bolza();

/// Expected sheet shift (cocycle / 2) per (face, slot) of the Bolza
/// surface; the reconstruction target.
const std::vector<std::vector<int>>& bolza_sheet_shifts();

/// The polygon base: one p-gon with opposite sides identified (p even) or
/// two p-gons glued slot-to-slot (p odd).  Holonomy is trivial: crossings
/// carry class 0 (even p) or a half turn that cancels over closed loops
/// (odd p); asserted.
TiledSurface pi_p(int p);

/// Flat torus maps used as extra test inputs.  p = 4: an n x n grid of
/// squares ({4,4}, m = n^2).  p = 6: a cyclic strip of `size` hexagons
/// ({6,3}, m = size).  Throws InvalidSizeError.
TiledSurface torus_map(int p, int size);

struct CatalogExpected {
  SchlafliSymbol symbol;
  int genus;
  std::uint64_t rot_order;
};

struct CatalogEntry {
  std::string name;
  TiledSurface surface;
  std::optional<CatalogExpected> expected;
};

/// Built-in surfaces in a fixed order: the five classical solids, the
/// Bolza surface, pi_3 .. pi_12, and a 2x2 square torus.
const std::vector<CatalogEntry>& builtin_catalog();

/// Catalog lookup by name; nullptr when absent.
const CatalogEntry* find_builtin(std::string_view name);

// JSON surface format:
//   { "p": 4, "faces": 6, "adj": [ [[g,b], ...p entries], ...m entries ] }
// Zero-based indices; validation runs on load.

nlohmann::json surface_to_json(const TiledSurface& surface);
TiledSurface surface_from_json(const nlohmann::json& value);  // ParseError / ValidationError

/// Canonical serialisation: 2-space indent, sorted keys, trailing newline.
/// save(load(x)) is byte-identical for canonically formatted input.
std::string canonical_surface_text(const TiledSurface& surface);

TiledSurface load_surface(const std::filesystem::path& path);
void save_surface(const TiledSurface& surface, const std::filesystem::path& path);

}  // namespace platonic
