#pragma once

#include <optional>
#include <vector>

#include "platonic/perm_group.hpp"
#include "platonic/permutation.hpp"
#include "platonic/surface.hpp"

namespace platonic {

/// True iff `candidate` (a permutation of the mp pairs) commutes with both
/// the slot successor and the crossing, i.e. is an orientation-preserving
/// map automorphism.
bool is_map_automorphism(const TiledSurface& surface, const Permutation& candidate);

/// All orientation-preserving automorphisms, as permutations of the mp
/// pairs.  Fixes the base pair (0,0), tries each of the mp candidate
/// images, and keeps those whose propagation through sigma and alpha closes
/// consistently.  Deterministic order: ascending image pair index, so the
/// identity comes first.  O((mp)^2).
std::vector<Permutation> enumerate_rotations(const TiledSurface& surface);

/// The rotation group Rot(D) on pairs.  Asserts the enumerated set is
/// closed under composition and inversion.
PermutationGroup rotation_group(const TiledSurface& surface);

/// True iff |Rot(D)| = mp, equivalently Rot(D) is transitive on pairs.
/// Both characterisations are computed and checked against each other.
bool is_rotary(const TiledSurface& surface);

/// True iff the surface admits an orientation-reversing automorphism
/// (conjugates sigma to its inverse while commuting with the crossing).
bool is_reflexible(const TiledSurface& surface);

/// An orientation-preserving map isomorphism a -> b as a bijection of pair
/// indices, if one exists.  Used for the dual-of-dual check.
std::optional<Permutation> find_isomorphism(const TiledSurface& a, const TiledSurface& b);

}  // namespace platonic
