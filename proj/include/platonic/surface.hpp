#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

namespace platonic {

/// The symbol {p, q}: faces with p edges, vertices of degree q.
struct SchlafliSymbol {
  int p;
  int q;

  SchlafliSymbol(int p_, int q_);
  int gcd_pq() const;
  bool operator==(const SchlafliSymbol&) const = default;
};

/// A (face, edge-slot) tuple.  Slots are numbered 0..p-1 counterclockwise
/// around each face, slot 0 being the distinguished bottom edge.
struct Pair {
  int face = 0;
  int slot = 0;
  auto operator<=>(const Pair&) const = default;
};

/// A closed oriented surface glued from m regular p-gons.
///
/// adjacent(f, a) = (g, b) means slot a of face f is glued to slot b of
/// face g.  Counterclockwise slot numbering makes this a rotation system,
/// so orientability is built into the representation.  Instances are
/// immutable; construction checks table shape only, `validate` checks the
/// gluing invariants.
class TiledSurface {
public:
  TiledSurface(int p, std::vector<std::vector<Pair>> adjacency);

  int polygon_sides() const { return p_; }
  int face_count() const { return static_cast<int>(adjacency_.size()); }
  int pair_count() const { return face_count() * p_; }

  const Pair& adjacent(int face, int slot) const { return adjacency_[face][slot]; }
  const std::vector<std::vector<Pair>>& adjacency() const { return adjacency_; }

  /// The slot-successor sigma: (f, a) -> (f, a+1 mod p).
  Pair next_slot(Pair x) const { return {x.face, (x.slot + 1) % p_}; }
  /// The crossing alpha: (f, a) -> adjacent(f, a).
  Pair cross(Pair x) const { return adjacency_[x.face][x.slot]; }

  int pair_index(Pair x) const { return x.face * p_ + x.slot; }
  Pair pair_at(int index) const { return {index / p_, index % p_}; }

  bool operator==(const TiledSurface&) const = default;

private:
  int p_;
  std::vector<std::vector<Pair>> adjacency_;
};

enum class ValidationIssue {
  Ok,
  IndexRange,
  SelfGluedSlot,
  InvolutionBroken,
  Disconnected,
};

std::string to_string(ValidationIssue issue);

struct ValidationResult {
  ValidationIssue issue = ValidationIssue::Ok;
  int face = -1;
  int slot = -1;
  std::string message;

  bool ok() const { return issue == ValidationIssue::Ok; }
};

/// Checks index ranges, the fixed-point-free involution property and
/// connectivity of the face-adjacency graph.  Returns the first violation
/// found; never throws.
ValidationResult validate(const TiledSurface& surface);

/// Partitions the mp corners into vertex cycles under the walk
/// (f, a) -> (g, b+1 mod p) with (g, b) = adjacent(f, a).  One cycle per
/// vertex; the cycle length is the vertex degree.
std::vector<std::vector<Pair>> vertex_orbits(const TiledSurface& surface);

/// Vertex degrees do not all agree; carries the sorted degree multiset.
struct NotRegular {
  std::vector<int> vertex_degrees;
};

/// {p, q} when the surface is equivelar, NotRegular otherwise.
std::variant<SchlafliSymbol, NotRegular> schlafli(const TiledSurface& surface);

bool is_regular(const TiledSurface& surface);

/// chi = V - E + F.  Throws MalformedSurfaceError when mp is odd.
int euler_characteristic(const TiledSurface& surface);

/// (2 - chi) / 2.  Throws MalformedSurfaceError when chi is odd.
int genus(const TiledSurface& surface);

/// The dual map: one q-gon face per vertex of the input, slot order
/// inherited from the corner-walk cyclic order.  Requires a regular
/// surface (throws NotRegularError).
TiledSurface dual(const TiledSurface& surface);

}  // namespace platonic
