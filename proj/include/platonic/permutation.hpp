#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace platonic {

/// A permutation of the points {0, ..., n-1}, stored as its image table.
///
/// Immutable after construction.  Composition is `(a * b)[x] == a[b[x]]`,
/// i.e. `b` acts first.
class Permutation {
public:
  /// Identity permutation on `degree` points.
  explicit Permutation(int degree);

  /// Permutation with image[i] = image of point i.  Throws
  /// std::invalid_argument if the table is not a bijection.
  explicit Permutation(std::vector<int> image);

  /// Builds a permutation from disjoint cycles; points absent from every
  /// cycle are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  /// Parses cycle notation such as "(0 19 21)(1 18 4)".  Fixed points are
  /// implicit; "()" denotes the identity.  Throws ParseError on bad input.
  static Permutation parse_cycles(int degree, std::string_view text);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator[](int point) const { return image_[point]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Order of the permutation as a group element (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Disjoint cycles of length >= 2.  Each cycle starts at its smallest
  /// point; cycles are listed by smallest point ascending.
  std::vector<std::vector<int>> cycles() const;

  /// Canonical cycle-notation string matching cycles(); "()" for identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation& rhs) const = default;

private:
  std::vector<int> image_;
};

}  // namespace platonic
