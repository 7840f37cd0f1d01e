#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ssg {

/// A bijection of {0, ..., degree-1}. Printed and parsed 1-based.
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// Throws DefinitionError unless `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);
  /// `cycles` are 1-based, as written in cycle notation.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  /// Nontrivial cycles, 1-based, each starting at its least point, sorted by
  /// that point.
  std::vector<std::vector<std::size_t>> cycles() const;
  /// "(1 2)(3 4)"; the identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// i -> s(t(i)): t is applied first.
Permutation perm_compose(const Permutation& s, const Permutation& t);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace ssg
