#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ssg {

/// A generator (by index into the owning definition's generator list) or its
/// formal inverse.
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  /// Dense code 2*generator + inverse, used for table lookups.
  std::uint32_t code() const { return 2 * generator + (inverse ? 1 : 0); }

  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;
};

/// Formal product of letters; the empty word is the identity. No reduction is
/// ever applied implicitly.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word letter(std::uint32_t generator, bool inverse = false) {
    return Word{Letter{generator, inverse}};
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  Word inverse() const;
  Word freely_reduced() const;
  Word power(std::size_t k) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Words in the file grammar: "1" for the identity, otherwise atoms joined by
/// '*', with "'" marking an inverse.
std::string format_word(const Word& w, std::span<const std::string> names);

/// Deterministic order: shorter first, then letterwise by (generator name,
/// positive before inverse).
class WordOrder {
 public:
  explicit WordOrder(std::span<const std::string> names) : names_(names) {}
  std::weak_ordering compare(const Word& a, const Word& b) const;
  bool operator()(const Word& a, const Word& b) const { return compare(a, b) < 0; }

 private:
  std::span<const std::string> names_;
};

}  // namespace ssg
