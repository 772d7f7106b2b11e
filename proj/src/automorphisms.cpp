#include "platonic/automorphisms.hpp"

#include <algorithm>
#include <set>

#include "platonic/errors.hpp"

namespace platonic {

namespace {

// Extends seed (0,0) -> image to a full map of pair indices by propagating
// slot-successor and crossing moves.  `reverse_orientation` conjugates the
// slot successor to its inverse instead, which captures reflections.
// Returns the image table, or nothing if propagation is inconsistent or not
// bijective.  Source and target may be different surfaces.
std::optional<std::vector<int>> propagate(const TiledSurface& source, const TiledSurface& target,
                                          int image_of_base, bool reverse_orientation = false) {
  const int n = source.pair_count();
  std::vector<int> image(n, -1);
  image[0] = image_of_base;
  std::vector<int> frontier{0};

  auto assign = [&](Pair from, Pair to) -> bool {
    const int from_index = source.pair_index(from);
    const int to_index = target.pair_index(to);
    if (image[from_index] == -1) {
      image[from_index] = to_index;
      frontier.push_back(from_index);
      return true;
    }
    return image[from_index] == to_index;
  };

  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Pair x = source.pair_at(frontier[head]);
    const Pair y = target.pair_at(image[frontier[head]]);

    Pair y_next = target.next_slot(y);
    if (reverse_orientation) {
      const int p = target.polygon_sides();
      y_next = {y.face, (y.slot + p - 1) % p};
    }
    if (!assign(source.next_slot(x), y_next)) return std::nullopt;
    if (!assign(source.cross(x), target.cross(y))) return std::nullopt;
  }

  // Connectivity makes the frontier cover every pair; still guard against
  // disconnected input, and require a bijection.
  std::vector<bool> hit(target.pair_count(), false);
  for (int value : image) {
    if (value == -1 || hit[value]) return std::nullopt;
    hit[value] = true;
  }
  return image;
}

}  // namespace

bool is_map_automorphism(const TiledSurface& surface, const Permutation& candidate) {
  if (candidate.degree() != surface.pair_count()) return false;
  for (int i = 0; i < surface.pair_count(); ++i) {
    const Pair x = surface.pair_at(i);
    const Pair y = surface.pair_at(candidate[i]);
    if (candidate[surface.pair_index(surface.next_slot(x))] !=
        surface.pair_index(surface.next_slot(y)))
      return false;
    if (candidate[surface.pair_index(surface.cross(x))] !=
        surface.pair_index(surface.cross(y)))
      return false;
  }
  return true;
}

std::vector<Permutation> enumerate_rotations(const TiledSurface& surface) {
  std::vector<Permutation> rotations;
  for (int target = 0; target < surface.pair_count(); ++target) {
    if (auto image = propagate(surface, surface, target))
      rotations.emplace_back(std::move(*image));
  }

  // The set is a group: an automorphism is determined by the image of the
  // base pair, so composites and inverses must re-appear in the list.
  std::set<std::vector<int>> element_set;
  for (const auto& rotation : rotations) element_set.insert(rotation.image());
  for (const auto& a : rotations) {
    detail::check(element_set.count(a.inverse().image()) == 1,
                  "rotation set closed under inversion");
    for (const auto& b : rotations)
      detail::check(element_set.count((a * b).image()) == 1,
                    "rotation set closed under composition");
  }
  return rotations;
}

PermutationGroup rotation_group(const TiledSurface& surface) {
  auto rotations = enumerate_rotations(surface);
  PermutationGroup group(surface.pair_count(), rotations);
  detail::check(group.order() == rotations.size(),
                "rotation group order matches enumeration count");
  return group;
}

bool is_rotary(const TiledSurface& surface) {
  const auto rotations = enumerate_rotations(surface);
  const bool full_order = static_cast<int>(rotations.size()) == surface.pair_count();

  // Transitivity on pairs must agree: the action is free, so the orbit of
  // the base pair has exactly |Rot| elements.
  std::vector<bool> in_orbit(surface.pair_count(), false);
  int orbit_size = 0;
  for (const auto& rotation : rotations) {
    if (!in_orbit[rotation[0]]) {
      in_orbit[rotation[0]] = true;
      ++orbit_size;
    }
  }
  const bool transitive = orbit_size == surface.pair_count();
  detail::check(full_order == transitive,
                "|Rot| = mp agrees with transitivity on pairs");
  return full_order;
}

bool is_reflexible(const TiledSurface& surface) {
  for (int target = 0; target < surface.pair_count(); ++target) {
    if (propagate(surface, surface, target, /*reverse_orientation=*/true)) return true;
  }
  return false;
}

std::optional<Permutation> find_isomorphism(const TiledSurface& a, const TiledSurface& b) {
  if (a.polygon_sides() != b.polygon_sides() || a.face_count() != b.face_count())
    return std::nullopt;
  for (int target = 0; target < b.pair_count(); ++target) {
    if (auto image = propagate(a, b, target)) return Permutation(std::move(*image));
  }
  return std::nullopt;
}

}  // namespace platonic
