#include "platonic/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "platonic/errors.hpp"

namespace platonic {

PermutationGroup::PermutationGroup(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("group degree must be positive");
}

namespace {

int smallest_moved_point(const Permutation& g) {
  for (int point = 0; point < g.degree(); ++point)
    if (g[point] != point) return point;
  return -1;
}

}  // namespace

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : PermutationGroup(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatchError("generator degree " + std::to_string(g.degree()) +
                                " does not match group degree " + std::to_string(degree));
  }
  generators_ = std::move(generators);

  // Base selection: every non-identity generator must move a base point.
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    bool moves_base = false;
    for (const auto& level : levels_) {
      if (g[level.base_point] != level.base_point) {
        moves_base = true;
        break;
      }
    }
    if (!moves_base) {
      Level fresh;
      fresh.base_point = smallest_moved_point(g);
      levels_.push_back(std::move(fresh));
    }
  }

  // Level i holds the generators fixing the first i base points.
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    for (auto& level : levels_) {
      level.gens.push_back(g);
      if (g[level.base_point] != level.base_point) break;
    }
  }

  schreier_sims();
}

void PermutationGroup::schreier_sims() {
  for (auto& level : levels_) rebuild_orbit(level);

  // Bottom-up verification: levels deeper than i are complete stabilizer
  // steps.  A surviving sift residue is a new strong generator for every
  // level down to where sifting stopped; processing then resumes there.
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    rebuild_orbit(levels_[i]);
    bool modified = false;
    for (std::size_t head = 0; !modified && head < levels_[i].orbit.size(); ++head) {
      const int point = levels_[i].orbit[head];
      for (std::size_t gi = 0; !modified && gi < levels_[i].gens.size(); ++gi) {
        const Permutation& s = levels_[i].gens[gi];
        const Permutation schreier =
            levels_[i].transversal[s[point]]->inverse() * s * *levels_[i].transversal[point];
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(schreier, i + 1);
        if (residue.is_identity()) continue;

        if (stop == levels_.size()) {
          Level fresh;
          fresh.base_point = smallest_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = i + 1; l <= stop; ++l) levels_[l].gens.push_back(residue);
        i = static_cast<int>(stop);
        modified = true;
      }
    }
    if (!modified) --i;
  }
}

void PermutationGroup::rebuild_orbit(Level& level) const {
  level.orbit.clear();
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.push_back(level.base_point);
  level.transversal[level.base_point] = Permutation(degree_);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    int point = level.orbit[head];
    for (const auto& g : level.gens) {
      int target = g[point];
      if (!level.transversal[target]) {
        level.transversal[target] = g * *level.transversal[point];
        level.orbit.push_back(target);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(Permutation x,
                                                           std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    int target = x[level.base_point];
    if (!level.transversal[target]) return {std::move(x), i};
    x = level.transversal[target]->inverse() * x;
  }
  return {std::move(x), levels_.size()};
}

std::uint64_t PermutationGroup::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(level.orbit.size()), &result))
      throw std::overflow_error("group order exceeds 64 bits");
  }
  return result;
}

bool PermutationGroup::contains(const Permutation& x) const {
  if (x.degree() != degree_)
    throw DegreeMismatchError("membership query degree " + std::to_string(x.degree()) +
                              " does not match group degree " + std::to_string(degree_));
  auto [residue, stop] = sift(x, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<int> PermutationGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) throw std::invalid_argument("orbit point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<int> frontier{point};
  seen[point] = true;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (const auto& g : generators_) {
      int target = g[frontier[head]];
      if (!seen[target]) {
        seen[target] = true;
        frontier.push_back(target);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

bool PermutationGroup::is_transitive() const {
  return static_cast<int>(orbit(0).size()) == degree_;
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t limit) const {
  if (order() > limit) throw std::length_error("group too large to enumerate");
  // Every element factors uniquely as u_0 * u_1 * ... with u_i drawn from
  // the level-i transversal, so build products from the deepest level out.
  std::vector<Permutation> result{Permutation(degree_)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> extended;
    extended.reserve(result.size() * it->orbit.size());
    for (int point : it->orbit)
      for (const auto& tail : result) extended.push_back(*it->transversal[point] * tail);
    result = std::move(extended);
  }
  return result;
}

bool PermutationGroup::is_cyclic() const {
  const std::uint64_t n = order();
  if (n == 1) return true;
  for (const auto& element : elements())
    if (element.order() == n) return true;
  return false;
}

bool PermutationGroup::same_group_as(const PermutationGroup& other) const {
  if (degree_ != other.degree_ || order() != other.order()) return false;
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

std::vector<int> PermutationGroup::base() const {
  std::vector<int> result;
  for (const auto& level : levels_) result.push_back(level.base_point);
  return result;
}

std::vector<std::vector<int>> PermutationGroup::orbits_along_chain() const {
  std::vector<std::vector<int>> result;
  for (const auto& level : levels_) result.push_back(level.orbit);
  return result;
}

bool is_normal_in(const PermutationGroup& n, const PermutationGroup& g) {
  if (n.degree() != g.degree())
    throw DegreeMismatchError("normality test needs equal degrees");
  for (const auto& x : n.generators()) {
    if (!g.contains(x))
      throw NotASubgroupError("generator " + x.to_cycle_string() + " is not in the supergroup");
  }
  for (const auto& conjugator : g.generators()) {
    const Permutation inv = conjugator.inverse();
    for (const auto& x : n.generators()) {
      if (!n.contains(conjugator * x * inv)) return false;
    }
  }
  return true;
}

std::uint64_t QuotientGroup::element_order(int i) const {
  std::uint64_t result = 1;
  int current = i;
  while (current != 0) {
    current = table[current][i];
    ++result;
  }
  return result;
}

bool QuotientGroup::is_cyclic() const {
  for (std::size_t i = 0; i < representatives.size(); ++i)
    if (element_order(static_cast<int>(i)) == order()) return true;
  return false;
}

bool QuotientGroup::satisfies_group_axioms() const {
  const int n = static_cast<int>(representatives.size());
  for (int i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i) return false;
    bool has_inverse = false;
    for (int j = 0; j < n; ++j)
      if (table[i][j] == 0 && table[j][i] == 0) has_inverse = true;
    if (!has_inverse) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]]) return false;
  return true;
}

QuotientGroup quotient_by_normal(const PermutationGroup& g, const PermutationGroup& n,
                                 std::uint64_t max_index) {
  if (!is_normal_in(n, g)) throw NotNormalError("subgroup is not normal");
  detail::check(g.order() % n.order() == 0, "subgroup order divides group order");
  const std::uint64_t index = g.order() / n.order();
  if (index > max_index) throw std::length_error("quotient index too large");

  QuotientGroup q;
  q.representatives.push_back(Permutation(g.degree()));
  auto coset_of = [&](const Permutation& x) -> int {
    for (std::size_t i = 0; i < q.representatives.size(); ++i)
      if (n.contains(x * q.representatives[i].inverse())) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t head = 0; head < q.representatives.size(); ++head) {
    for (const auto& gen : g.generators()) {
      Permutation candidate = q.representatives[head] * gen;
      if (coset_of(candidate) < 0) q.representatives.push_back(std::move(candidate));
    }
  }
  detail::check(q.representatives.size() == index, "coset enumeration found the full quotient");

  q.table.assign(index, std::vector<int>(index, -1));
  for (std::size_t i = 0; i < index; ++i) {
    for (std::size_t j = 0; j < index; ++j) {
      int target = coset_of(q.representatives[i] * q.representatives[j]);
      detail::check(target >= 0, "coset product lands in an enumerated coset");
      q.table[i][j] = target;
    }
  }
  return q;
}

}  // namespace platonic
