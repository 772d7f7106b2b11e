#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "platonic/perm_group.hpp"
#include "platonic/surface.hpp"
#include "platonic/unfolding.hpp"

namespace platonic {

/// Structured pass/fail record of every structural check for one surface.
/// Fields beyond {p, q, m, d, rotary} are absent when the surface is not
/// regular and rotary.  gcd1_conclusion_holds is filled only when the
/// coprimality hypothesis holds.
struct VerificationReport {
  int p = 0;
  int q = 0;
  int m = 0;
  int d = 0;
  bool rotary = false;

  std::optional<int> k_prime;
  std::optional<int> k;
  std::optional<std::uint64_t> mon_order;
  std::optional<std::uint64_t> rot_order;
  std::optional<std::uint64_t> n_order;
  std::optional<std::uint64_t> quotient_order;

  std::optional<bool> k_prime_divides_k;
  std::optional<bool> k_bound_ok;
  std::optional<bool> mon_order_formula_ok;
  std::optional<bool> rot_order_mp_ok;
  std::optional<bool> n_is_subgroup;
  std::optional<bool> n_normal;
  std::optional<bool> quotient_cyclic;
  std::optional<bool> table2_lower_bound_ok;
  std::optional<bool> table3_upper_bound_ok;
  std::optional<bool> gcd1_hypothesis_holds;
  std::optional<bool> gcd1_conclusion_holds;
  std::optional<bool> projection_well_defined;

  /// True iff the surface is rotary and every present flag holds, except
  /// that gcd1_hypothesis_holds is descriptive and never counts as a
  /// failure.
  bool all_pass() const;
};

/// Lower bound for the monodromy order by the parity cell of {p, q}:
///   p odd:        q odd -> mp/d, else mp/2d
///   p = 0 mod 4:  mp/d
///   p = 2 mod 4:  q odd -> mp/2d, else mp/d
std::uint64_t table2_lower_bound(SchlafliSymbol symbol, int m);

/// Upper bound for the quotient order by the parity cell of {p, q}:
///   p odd:        q odd -> d, else 2d
///   p = 0 mod 4:  d
///   p = 2 mod 4:  q odd -> 2d, else d
std::uint64_t table3_upper_bound(SchlafliSymbol symbol);

/// Projects each deck transformation of the cover to a pair permutation of
/// the base: (f, t) |-> (f', t') induces (f, a) |-> (f', a + (t - t')/2).
/// Checks that the projection is independent of the cover copy (throws
/// ProjectionInconsistentError), that every image lies in `rot` (throws
/// NotInRotationGroupError), and that the n images are distinct.  Returns
/// the group N they generate, of order n.
PermutationGroup induced_subgroup(const UnfoldedSurface& unfolding,
                                  const PermutationGroup& rot);

/// Fills the subgroup/normality/cyclic-quotient fields.  Requires a rotary
/// surface.
VerificationReport verify_normal_embedding(const TiledSurface& surface);

/// Fills the k' | k, k-range, order-formula and table-bound fields.
VerificationReport verify_bounds(const TiledSurface& surface);

/// Fills the coprimality-hypothesis field, and the conclusion field
/// (|Mon| = |Rot| and N = Rot) when the hypothesis holds.  Reports, never
/// asserts: a counterexample surfaces as a failed flag.
VerificationReport verify_gcd1(const TiledSurface& surface);

/// Every check at once.  Non-regular or non-rotary surfaces yield a report
/// with rotary = false and none of the check fields.
VerificationReport full_report(const TiledSurface& surface);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& value);
std::string report_to_text(const VerificationReport& report);

}  // namespace platonic
