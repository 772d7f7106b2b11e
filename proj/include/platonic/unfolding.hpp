#pragma once

#include <vector>

#include "platonic/perm_group.hpp"
#include "platonic/permutation.hpp"
#include "platonic/surface.hpp"

namespace platonic {

/// Per-crossing rotation class in Z_2p, in units of pi/p.
///
/// Anti-parallel gluing of regular p-gons forces
///   rho[f][a] = (2(a - b) - p) mod 2p  with (g, b) = adjacent(f, a):
/// the directions t*(pi/p) + a*(2pi/p) and t'*(pi/p) + b*(2pi/p) of a glued
/// edge pair differ by exactly pi.  All angle arithmetic is exact integer
/// arithmetic; no floating point anywhere.
class RotationCocycle {
public:
  explicit RotationCocycle(const TiledSurface& surface);

  /// 2p, the modulus of every entry.
  int modulus() const { return modulus_; }
  int at(int face, int slot) const { return rho_[face][slot]; }
  const std::vector<std::vector<int>>& table() const { return rho_; }

private:
  int modulus_;
  std::vector<std::vector<int>> rho_;
};

/// Builds the cocycle and asserts antisymmetry (rho[g][b] = -rho[f][a]) and
/// parity (all entries even iff p is even).
RotationCocycle cocycle(const TiledSurface& surface);

/// Smallest k' > 0 with k' * q(p-2)/p * pi a multiple of 2pi, i.e.
/// 2p / gcd(2p, q(p-2)).  Asserted against the parity-case closed forms.
int k_prime(SchlafliSymbol symbol);

/// One polygon of the unfolded surface: base face `face` rotated by
/// `klass` * (pi/p).
struct CoverFace {
  int face;
  int klass;
  bool operator==(const CoverFace&) const = default;
};

/// The unfolding: the smallest cover with holonomy in 2*pi*Z, realised as
/// the component of (face 0, class 0) under (f, t) --slot a--> (g, t +
/// rho[f][a]).  Cover faces are listed in breadth-first discovery order
/// with slots scanned ascending, which fixes all downstream numbering.
///
/// Sheets of the covering over the polygon (p even) or double polygon
/// (p odd) base: every cover face for even p; the faces with even rotation
/// class for odd p.
class UnfoldedSurface {
public:
  explicit UnfoldedSurface(const TiledSurface& base);

  const TiledSurface& base() const { return base_; }
  const RotationCocycle& rotation_cocycle() const { return cocycle_; }

  /// Degree k of the covering over the base surface.
  int degree() const { return k_; }

  const std::vector<CoverFace>& faces() const { return faces_; }
  /// Index into faces(), or -1 when (face, klass) is not a cover face.
  int face_index(int face, int klass) const;
  /// Cover face reached from cover face `index` across slot `slot`.
  int crossing(int index, int slot) const { return crossing_[index][slot]; }

  /// The holonomy subgroup H of Z_2p, sorted ascending; |H| = k.
  const std::vector<int>& holonomy_subgroup() const { return holonomy_; }

  int sheet_count() const { return static_cast<int>(sheets_.size()); }
  const std::vector<int>& sheets() const { return sheets_; }
  /// Sheet number of a cover face, or -1 when it is not in the fiber.
  int sheet_of(int index) const { return sheet_of_[index]; }

  /// The cover as a surface in its own right (faces renumbered to cover
  /// indices, slots unchanged).
  TiledSurface cover_surface() const;

private:
  TiledSurface base_;
  RotationCocycle cocycle_;
  int k_ = 0;
  std::vector<CoverFace> faces_;
  std::vector<int> face_lookup_;  // (face * 2p + klass) -> cover index or -1
  std::vector<std::vector<int>> crossing_;
  std::vector<int> holonomy_;
  std::vector<int> sheets_;
  std::vector<int> sheet_of_;
};

/// Runs the unfolding and asserts its structural invariants: the class
/// sets over each face are cosets of one subgroup H with |H| = k, k' | k,
/// k <= p (p even) or k <= 2p (p odd) when the surface is regular, vertex
/// cone angles of the cover are multiples of 2*pi, and the sheet count is
/// km (p even) or km/2 (p odd).
UnfoldedSurface unfold(const TiledSurface& surface);

/// Sheet permutations generating the monodromy group.
///
/// p even: generator j in {0..p/2-1} crosses every cover face through its
/// slot of absolute direction class j, namely slot (j - t/2) mod p; the
/// opposite class gives the inverse (asserted).
///
/// p odd: crossing maps c_j send a sheet across its slot of absolute class
/// 2j into an odd-class face; the p-1 generators are c_0^-1 * c_j.
std::vector<Permutation> monodromy_generators(const UnfoldedSurface& unfolding);

/// The group generated by the sheet permutations.  Asserts transitivity and
/// |Mon| = sheet count; throws NormalityFailureError if the order exceeds
/// the sheet count, which signals a non-normal cover.
PermutationGroup monodromy_group(const UnfoldedSurface& unfolding);

/// One deck transformation of the cover per sheet: the unique extension of
/// sheet 0 |-> sheet s that preserves direction-labelled crossings,
/// propagated over all cover faces.  A propagation clash throws
/// NormalityFailureError.  The returned set is checked to be a group acting
/// simply transitively on the fiber.
std::vector<Permutation> deck_transformations(const UnfoldedSurface& unfolding);

}  // namespace platonic
