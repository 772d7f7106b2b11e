#include "platonic/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "platonic/errors.hpp"

namespace platonic {

Permutation::Permutation(int degree) : image_(degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be non-negative");
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int x : image_) {
    if (x < 0 || x >= n || seen[x])
      throw std::invalid_argument("permutation image table is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(degree);
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[from]) throw std::invalid_argument("cycles are not disjoint");
      used[from] = true;
      image[from] = to;
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::parse_cycles(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty cycle string");
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<int> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected digit at position " + std::to_string(i));
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      cycle.push_back(value);
      skip_space();
    }
    if (i == text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < degree(); ++i) inv[image_[i]] = i;
  Permutation result(0);
  result.image_ = std::move(inv);
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : cycles())
    result = std::lcm<std::uint64_t>(result, cycle.size());
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> visited(image_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (visited[start] || image_[start] == start) continue;
    std::vector<int> cycle;
    int x = start;
    while (!visited[x]) {
      visited[x] = true;
      cycle.push_back(x);
      x = image_[x];
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatchError("cannot compose permutations of degrees " +
                              std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  std::vector<int> image(a.degree());
  for (int x = 0; x < a.degree(); ++x) image[x] = a.image_[b.image_[x]];
  Permutation result(0);
  result.image_ = std::move(image);
  return result;
}

}  // namespace platonic
