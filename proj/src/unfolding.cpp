#include "platonic/unfolding.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "platonic/errors.hpp"

namespace platonic {

namespace {

int mod(int value, int modulus) {
  int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

RotationCocycle::RotationCocycle(const TiledSurface& surface)
    : modulus_(2 * surface.polygon_sides()) {
  const int p = surface.polygon_sides();
  rho_.resize(surface.face_count(), std::vector<int>(p));
  for (int f = 0; f < surface.face_count(); ++f)
    for (int a = 0; a < p; ++a)
      rho_[f][a] = mod(2 * (a - surface.adjacent(f, a).slot) - p, modulus_);
}

RotationCocycle cocycle(const TiledSurface& surface) {
  RotationCocycle result(surface);
  const int p = surface.polygon_sides();
  for (int f = 0; f < surface.face_count(); ++f) {
    for (int a = 0; a < p; ++a) {
      const Pair other = surface.adjacent(f, a);
      detail::check(mod(result.at(f, a) + result.at(other.face, other.slot),
                        result.modulus()) == 0,
                    "cocycle antisymmetry");
      detail::check(result.at(f, a) % 2 == p % 2, "cocycle parity");
    }
  }
  return result;
}

int k_prime(SchlafliSymbol symbol) {
  const int p = symbol.p;
  const int q = symbol.q;
  const int value = 2 * p / std::gcd(2 * p, q * (p - 2));

  // The same number by parity cases on {p, q}.
  const int d = symbol.gcd_pq();
  int closed_form;
  if (p % 2 == 1) {
    closed_form = (q % 2 == 1) ? 2 * p / d : p / d;
  } else if (p % 4 == 0) {
    closed_form = p / d;
  } else {
    closed_form = (q % 2 == 1) ? p / (2 * d) : p / d;
  }
  detail::check(value == closed_form, "k' closed form by parity agrees with the gcd formula");
  return value;
}

UnfoldedSurface::UnfoldedSurface(const TiledSurface& base)
    : base_(base), cocycle_(cocycle(base)) {
  const int p = base_.polygon_sides();
  const int two_p = 2 * p;
  const int m = base_.face_count();

  face_lookup_.assign(m * two_p, -1);
  auto lookup = [&](int face, int klass) -> int& { return face_lookup_[face * two_p + klass]; };

  lookup(0, 0) = 0;
  faces_.push_back({0, 0});
  for (std::size_t head = 0; head < faces_.size(); ++head) {
    const CoverFace current = faces_[head];  // copy; faces_ may grow
    for (int a = 0; a < p; ++a) {
      const int target_face = base_.adjacent(current.face, a).face;
      const int target_klass = mod(current.klass + cocycle_.at(current.face, a), two_p);
      if (lookup(target_face, target_klass) == -1) {
        lookup(target_face, target_klass) = static_cast<int>(faces_.size());
        faces_.push_back({target_face, target_klass});
      }
    }
  }

  crossing_.assign(faces_.size(), std::vector<int>(p, -1));
  for (std::size_t c = 0; c < faces_.size(); ++c) {
    for (int a = 0; a < p; ++a) {
      const int target_face = base_.adjacent(faces_[c].face, a).face;
      const int target_klass = mod(faces_[c].klass + cocycle_.at(faces_[c].face, a), two_p);
      crossing_[c][a] = lookup(target_face, target_klass);
    }
  }

  for (int t = 0; t < two_p; ++t)
    if (lookup(0, t) != -1) holonomy_.push_back(t);
  k_ = static_cast<int>(holonomy_.size());

  // Fiber over a base polygon of the (double) p-gon: every cover face when
  // p is even, the even-class faces when p is odd.
  sheet_of_.assign(faces_.size(), -1);
  for (std::size_t c = 0; c < faces_.size(); ++c) {
    if (p % 2 == 0 || faces_[c].klass % 2 == 0) {
      sheet_of_[c] = static_cast<int>(sheets_.size());
      sheets_.push_back(static_cast<int>(c));
    }
  }
}

int UnfoldedSurface::face_index(int face, int klass) const {
  return face_lookup_[face * cocycle_.modulus() + klass];
}

TiledSurface UnfoldedSurface::cover_surface() const {
  const int p = base_.polygon_sides();
  std::vector<std::vector<Pair>> adjacency(faces_.size(), std::vector<Pair>(p));
  for (std::size_t c = 0; c < faces_.size(); ++c)
    for (int a = 0; a < p; ++a)
      adjacency[c][a] = {crossing_[c][a], base_.adjacent(faces_[c].face, a).slot};
  return TiledSurface(p, std::move(adjacency));
}

UnfoldedSurface unfold(const TiledSurface& surface) {
  UnfoldedSurface result(surface);
  const int p = surface.polygon_sides();
  const int two_p = 2 * p;
  const int m = surface.face_count();
  const int k = result.degree();

  // H is a subgroup of Z_2p containing 0, and the class set over every face
  // is a coset of H of size k.
  const auto& h = result.holonomy_subgroup();
  detail::check(!h.empty() && h.front() == 0, "holonomy subgroup contains 0");
  std::set<int> h_set(h.begin(), h.end());
  for (int a : h)
    for (int b : h)
      detail::check(h_set.count(mod(a - b, two_p)) == 1,
                    "holonomy classes are closed under differences");
  std::vector<std::vector<int>> classes_of_face(m);
  for (const auto& cover : result.faces()) classes_of_face[cover.face].push_back(cover.klass);
  for (int f = 0; f < m; ++f) {
    detail::check(static_cast<int>(classes_of_face[f].size()) == k,
                  "every face carries exactly k cover copies");
    const int offset = classes_of_face[f].front();
    std::set<int> coset;
    for (int value : h) coset.insert((value + offset) % two_p);
    for (int value : classes_of_face[f])
      detail::check(coset.count(value) == 1, "face classes form a coset of H");
  }

  if (is_regular(surface)) {
    const auto symbol = std::get<SchlafliSymbol>(schlafli(surface));
    detail::check(k % k_prime(symbol) == 0, "k' divides k");
  }
  detail::check(k <= (p % 2 == 0 ? p : 2 * p), "k is at most p (p even) or 2p (p odd)");

  // Vertex loops close up: around any base vertex of degree d the cocycle
  // sums to -d(p-2), so d(p-2) mod 2p lies in H.
  for (const auto& cycle : vertex_orbits(surface)) {
    const int degree = static_cast<int>(cycle.size());
    detail::check(h_set.count(mod(degree * (p - 2), two_p)) == 1,
                  "vertex holonomy lies in the holonomy subgroup");
  }

  // Cone angles upstairs are genuine multiples of 2*pi.
  for (const auto& cycle : vertex_orbits(result.cover_surface())) {
    const int degree = static_cast<int>(cycle.size());
    detail::check(mod(degree * (p - 2), two_p) == 0,
                  "cover cone angles are multiples of 2*pi");
  }

  if (p % 2 == 0) {
    detail::check(result.sheet_count() == k * m, "sheet count is km for even p");
  } else {
    detail::check(2 * result.sheet_count() == k * m, "sheet count is km/2 for odd p");
  }
  return result;
}

std::vector<Permutation> monodromy_generators(const UnfoldedSurface& unfolding) {
  const TiledSurface& base = unfolding.base();
  const int p = base.polygon_sides();
  const int n = unfolding.sheet_count();
  const int cover_size = static_cast<int>(unfolding.faces().size());

  // Slot of a cover face whose absolute direction class (units pi/p) is
  // `klass`; requires matching parity.
  auto slot_for_class = [&](int index, int klass) {
    const int t = unfolding.faces()[index].klass;
    const int diff = mod(klass - t, 2 * p);
    detail::check(diff % 2 == 0, "direction class parity matches the face class");
    return (diff / 2) % p;
  };

  if (p % 2 == 0) {
    std::vector<Permutation> all;
    for (int j = 0; j < p; ++j) {
      std::vector<int> image(cover_size);
      for (int c = 0; c < cover_size; ++c)
        image[c] = unfolding.crossing(c, slot_for_class(c, 2 * j));
      all.emplace_back(std::move(image));
    }
    for (int j = 0; j < p / 2; ++j)
      detail::check(all[j + p / 2] == all[j].inverse(),
                    "crossing the opposite direction class inverts the generator");
    all.erase(all.begin() + p / 2, all.end());
    return all;
  }

  // p odd: crossing maps from even-class sheets into odd-class faces.
  std::vector<std::vector<int>> cross_map(p, std::vector<int>(n));
  for (int j = 0; j < p; ++j) {
    std::vector<bool> hit(cover_size, false);
    for (int s = 0; s < n; ++s) {
      const int c = unfolding.sheets()[s];
      const int target = unfolding.crossing(c, slot_for_class(c, 2 * j));
      detail::check(unfolding.faces()[target].klass % 2 == 1,
                    "crossing maps send sheets to odd-class faces");
      detail::check(!hit[target], "crossing maps are injective");
      hit[target] = true;
      cross_map[j][s] = target;
    }
  }
  std::vector<int> back(cover_size, -1);
  for (int s = 0; s < n; ++s) back[cross_map[0][s]] = s;

  std::vector<Permutation> generators;
  for (int j = 1; j < p; ++j) {
    std::vector<int> image(n);
    for (int s = 0; s < n; ++s) {
      const int landing = back[cross_map[j][s]];
      detail::check(landing >= 0, "crossing maps share their image set");
      image[s] = landing;
    }
    generators.emplace_back(std::move(image));
  }
  return generators;
}

PermutationGroup monodromy_group(const UnfoldedSurface& unfolding) {
  PermutationGroup group(unfolding.sheet_count(), monodromy_generators(unfolding));
  detail::check(group.is_transitive(), "monodromy acts transitively on sheets");
  if (group.order() != static_cast<std::uint64_t>(unfolding.sheet_count()))
    throw NormalityFailureError(
        "monodromy order " + std::to_string(group.order()) + " differs from the sheet count " +
        std::to_string(unfolding.sheet_count()) + "; the covering is not normal");
  return group;
}

std::vector<Permutation> deck_transformations(const UnfoldedSurface& unfolding) {
  const int p = unfolding.base().polygon_sides();
  const int cover_size = static_cast<int>(unfolding.faces().size());
  const int n = unfolding.sheet_count();

  std::vector<Permutation> decks;
  decks.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::vector<int> image(cover_size, -1);
    image[unfolding.sheets()[0]] = unfolding.sheets()[s];
    std::vector<int> frontier{unfolding.sheets()[0]};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const int x = frontier[head];
      const int y = image[x];
      const int tx = unfolding.faces()[x].klass;
      const int ty = unfolding.faces()[y].klass;
      for (int a = 0; a < p; ++a) {
        // Same absolute direction class on both sides.
        const int diff = mod(tx + 2 * a - ty, 2 * p);
        if (diff % 2 != 0)
          throw NormalityFailureError("deck propagation hit a class parity clash");
        const int slot_y = (diff / 2) % p;
        const int x_next = unfolding.crossing(x, a);
        const int y_next = unfolding.crossing(y, slot_y);
        if (image[x_next] == -1) {
          image[x_next] = y_next;
          frontier.push_back(x_next);
        } else if (image[x_next] != y_next) {
          throw NormalityFailureError(
              "no deck transformation moves sheet 0 to sheet " + std::to_string(s) +
              "; the covering is not normal");
        }
      }
    }
    std::vector<bool> hit(cover_size, false);
    for (int value : image) {
      if (value == -1)
        throw NormalityFailureError("deck propagation did not reach the whole cover");
      if (hit[value])
        throw NormalityFailureError("deck propagation is not a bijection of the cover");
      hit[value] = true;
    }
    decks.emplace_back(std::move(image));
  }

  // The deck maps form a group acting simply transitively on the fiber.
  std::set<std::vector<int>> deck_set;
  for (const auto& deck : decks) deck_set.insert(deck.image());
  detail::check(deck_set.size() == decks.size(), "deck transformations are distinct");
  for (const auto& a : decks) {
    detail::check(deck_set.count(a.inverse().image()) == 1, "deck set closed under inversion");
    for (const auto& b : decks)
      detail::check(deck_set.count((a * b).image()) == 1, "deck set closed under composition");
  }
  for (const auto& deck : decks) {
    for (int s = 0; s < n; ++s)
      detail::check(unfolding.sheet_of(deck[unfolding.sheets()[s]]) >= 0,
                    "deck transformations preserve the fiber");
  }
  return decks;
}

}  // namespace platonic
