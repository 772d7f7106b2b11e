#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "platonic/permutation.hpp"

namespace platonic {

/// A permutation group given by generators, with a base and strong
/// generating set built by the deterministic Schreier-Sims algorithm.
///
/// The chain is a pure function of (degree, generator list, generator
/// order): base points are chosen as the smallest point moved by the strong
/// generator that forced the base extension, orbits are explored
/// breadth-first with generators applied in list order, and transversals
/// are stored as explicit per-point arrays.  Two constructions from
/// identical input produce identical chains.
///
/// Immutable after construction; all queries are const and safe to run
/// concurrently.
class PermutationGroup {
public:
  /// Trivial group on `degree` points.
  explicit PermutationGroup(int degree);

  PermutationGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Exact group order (product of transversal sizes along the chain).
  std::uint64_t order() const;

  bool is_trivial() const { return levels_.empty(); }

  /// Membership via sifting.  Throws DegreeMismatchError.
  bool contains(const Permutation& x) const;

  /// Orbit of `point` under the generators, sorted ascending.
  std::vector<int> orbit(int point) const;

  /// True iff the orbit of 0 is all of {0, ..., degree-1}.
  bool is_transitive() const;

  /// Every group element, enumerated deterministically from the chain.
  /// Throws std::length_error if the order exceeds `limit`.
  std::vector<Permutation> elements(std::uint64_t limit = 1u << 20) const;

  /// True iff some element's order equals the group order.  Enumerates
  /// elements, so intended for small groups.
  bool is_cyclic() const;

  bool same_group_as(const PermutationGroup& other) const;

  // Chain introspection, used by determinism tests.
  std::vector<int> base() const;
  std::vector<std::vector<int>> orbits_along_chain() const;

private:
  struct Level {
    int base_point = 0;
    // Strong generators fixing the base points of every earlier level.
    std::vector<Permutation> gens;
    std::vector<int> orbit;  // discovery order, orbit[0] == base_point
    std::vector<std::optional<Permutation>> transversal;
  };

  void schreier_sims();
  void rebuild_orbit(Level& level) const;
  // Returns the sift residue and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation x, std::size_t from_level) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

/// True iff n is normal in g, by conjugating every generator of n with
/// every generator of g.  Requires n <= g (throws NotASubgroupError) and
/// matching degrees (throws DegreeMismatchError).
bool is_normal_in(const PermutationGroup& n, const PermutationGroup& g);

/// A finite group presented by a coset multiplication table, as produced by
/// quotient_by_normal.  Index 0 is the identity coset.
struct QuotientGroup {
  std::vector<Permutation> representatives;
  std::vector<std::vector<int>> table;

  std::uint64_t order() const { return representatives.size(); }
  int multiply(int i, int j) const { return table[i][j]; }
  std::uint64_t element_order(int i) const;
  bool is_cyclic() const;

  /// Associativity, identity and inverses straight from the table.
  bool satisfies_group_axioms() const;
};

/// Quotient g / n for n normal in g.  Throws NotASubgroupError or
/// NotNormalError when the preconditions fail, and std::length_error when
/// the index exceeds `max_index`.
QuotientGroup quotient_by_normal(const PermutationGroup& g, const PermutationGroup& n,
                                 std::uint64_t max_index = 4096);

}  // namespace platonic
