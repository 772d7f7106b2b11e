#include "platonic/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "platonic/errors.hpp"

namespace platonic {

SchlafliSymbol::SchlafliSymbol(int p_, int q_) : p(p_), q(q_) {
  if (p < 3 || q < 3)
    throw std::invalid_argument("Schlafli symbol requires p >= 3 and q >= 3");
}

int SchlafliSymbol::gcd_pq() const { return std::gcd(p, q); }

TiledSurface::TiledSurface(int p, std::vector<std::vector<Pair>> adjacency)
    : p_(p), adjacency_(std::move(adjacency)) {
  if (p_ < 3) throw std::invalid_argument("faces need at least 3 sides");
  if (adjacency_.empty()) throw std::invalid_argument("surface needs at least one face");
  for (const auto& row : adjacency_) {
    if (static_cast<int>(row.size()) != p_)
      throw std::invalid_argument("every face needs exactly p slots");
  }
}

std::string to_string(ValidationIssue issue) {
  switch (issue) {
    case ValidationIssue::Ok: return "ok";
    case ValidationIssue::IndexRange: return "index_range";
    case ValidationIssue::SelfGluedSlot: return "self_glued_slot";
    case ValidationIssue::InvolutionBroken: return "involution";
    case ValidationIssue::Disconnected: return "disconnected";
  }
  return "unknown";
}

ValidationResult validate(const TiledSurface& surface) {
  const int m = surface.face_count();
  const int p = surface.polygon_sides();

  for (int f = 0; f < m; ++f) {
    for (int a = 0; a < p; ++a) {
      const Pair target = surface.adjacent(f, a);
      if (target.face < 0 || target.face >= m || target.slot < 0 || target.slot >= p) {
        std::ostringstream msg;
        msg << "face " << f << " slot " << a << " glues to (" << target.face << ","
            << target.slot << ") which is out of range";
        return {ValidationIssue::IndexRange, f, a, msg.str()};
      }
    }
  }
  for (int f = 0; f < m; ++f) {
    for (int a = 0; a < p; ++a) {
      const Pair target = surface.adjacent(f, a);
      if (target.face == f && target.slot == a) {
        std::ostringstream msg;
        msg << "face " << f << " slot " << a << " is glued to itself";
        return {ValidationIssue::SelfGluedSlot, f, a, msg.str()};
      }
      const Pair back = surface.adjacent(target.face, target.slot);
      if (back.face != f || back.slot != a) {
        std::ostringstream msg;
        msg << "gluing is not an involution at face " << f << " slot " << a << ": ("
            << f << "," << a << ") -> (" << target.face << "," << target.slot
            << ") but (" << target.face << "," << target.slot << ") -> (" << back.face
            << "," << back.slot << ")";
        return {ValidationIssue::InvolutionBroken, f, a, msg.str()};
      }
    }
  }

  std::vector<bool> reached(m, false);
  std::vector<int> frontier{0};
  reached[0] = true;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (int a = 0; a < p; ++a) {
      int g = surface.adjacent(frontier[head], a).face;
      if (!reached[g]) {
        reached[g] = true;
        frontier.push_back(g);
      }
    }
  }
  for (int f = 0; f < m; ++f) {
    if (!reached[f]) {
      std::ostringstream msg;
      msg << "face-adjacency graph is disconnected: face " << f
          << " is unreachable from face 0";
      return {ValidationIssue::Disconnected, f, -1, msg.str()};
    }
  }
  return {};
}

std::vector<std::vector<Pair>> vertex_orbits(const TiledSurface& surface) {
  const int p = surface.polygon_sides();
  std::vector<std::vector<Pair>> orbits;
  std::vector<bool> visited(surface.pair_count(), false);
  for (int start = 0; start < surface.pair_count(); ++start) {
    if (visited[start]) continue;
    std::vector<Pair> cycle;
    Pair corner = surface.pair_at(start);
    while (!visited[surface.pair_index(corner)]) {
      visited[surface.pair_index(corner)] = true;
      cycle.push_back(corner);
      const Pair crossed = surface.cross(corner);
      corner = {crossed.face, (crossed.slot + 1) % p};
    }
    orbits.push_back(std::move(cycle));
  }
  return orbits;
}

std::variant<SchlafliSymbol, NotRegular> schlafli(const TiledSurface& surface) {
  const auto orbits = vertex_orbits(surface);
  std::vector<int> degrees;
  degrees.reserve(orbits.size());
  for (const auto& cycle : orbits) degrees.push_back(static_cast<int>(cycle.size()));
  std::sort(degrees.begin(), degrees.end());
  const bool equal = degrees.front() == degrees.back();
  if (!equal || degrees.front() < 3) return NotRegular{std::move(degrees)};
  return SchlafliSymbol(surface.polygon_sides(), degrees.front());
}

bool is_regular(const TiledSurface& surface) {
  return std::holds_alternative<SchlafliSymbol>(schlafli(surface));
}

int euler_characteristic(const TiledSurface& surface) {
  const int corners = surface.pair_count();
  if (corners % 2 != 0)
    throw MalformedSurfaceError("mp is odd, so the edge count is not an integer");
  const int vertices = static_cast<int>(vertex_orbits(surface).size());
  return vertices - corners / 2 + surface.face_count();
}

int genus(const TiledSurface& surface) {
  const int chi = euler_characteristic(surface);
  if ((2 - chi) % 2 != 0)
    throw MalformedSurfaceError("Euler characteristic is odd; surface is not closed orientable");
  return (2 - chi) / 2;
}

TiledSurface dual(const TiledSurface& surface) {
  const auto symbol = schlafli(surface);
  if (!std::holds_alternative<SchlafliSymbol>(symbol)) {
    throw NotRegularError("dual requires an equivelar surface");
  }
  const int q = std::get<SchlafliSymbol>(symbol).q;

  const auto orbits = vertex_orbits(surface);
  // Each corner becomes a slot of the dual face built on its vertex.
  std::map<Pair, Pair> dual_slot_of_corner;
  for (std::size_t v = 0; v < orbits.size(); ++v)
    for (std::size_t i = 0; i < orbits[v].size(); ++i)
      dual_slot_of_corner[orbits[v][i]] = {static_cast<int>(v), static_cast<int>(i)};

  std::vector<std::vector<Pair>> adjacency(orbits.size(), std::vector<Pair>(q));
  for (std::size_t v = 0; v < orbits.size(); ++v) {
    for (std::size_t i = 0; i < orbits[v].size(); ++i) {
      // The corner's half-edge is glued to the opposite half-edge, whose
      // tail corner locates the neighbouring dual face and slot.
      adjacency[v][i] = dual_slot_of_corner.at(surface.cross(orbits[v][i]));
    }
  }
  return TiledSurface(q, std::move(adjacency));
}

}  // namespace platonic
