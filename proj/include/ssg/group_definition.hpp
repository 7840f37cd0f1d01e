#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/word.hpp"
#include "ssg/wreath.hpp"

namespace ssg {

enum class GroupKind { self_similar, similar_sequence };

/// The recursion at one level: degree and the image of every generator.
struct LevelRecursion {
  std::size_t degree = 0;
  std::vector<WreathElement> images;  // indexed by generator
};

/// A wreath recursion, either self-similar (one level, repeated) or a
/// level-indexed similar sequence. Sections at level n are words over the
/// generators of level n+1; all levels share one generator set.
class GroupDefinition {
 public:
  using LevelFunction = std::function<LevelRecursion(std::size_t)>;

  static GroupDefinition self_similar(std::vector<std::string> generators,
                                      LevelRecursion recursion);
  /// Level n >= blocks.size() uses block
  /// repeat_from + (n - repeat_from) mod (blocks.size() - repeat_from).
  static GroupDefinition similar(std::vector<std::string> generators,
                                 std::vector<LevelRecursion> blocks,
                                 std::size_t repeat_from);
  /// Arbitrary sequence; levels are materialized on first use.
  static GroupDefinition similar(std::vector<std::string> generators,
                                 LevelFunction levels);

  GroupKind kind() const { return kind_; }
  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::optional<std::uint32_t> find_generator(std::string_view name) const;

  const LevelRecursion& recursion(std::size_t level) const;
  std::size_t degree(std::size_t level) const { return recursion(level).degree; }
  /// Image of a letter at `level` (inverse letters are precomputed).
  const WreathElement& image(std::size_t level, Letter letter) const;

  /// True for self-similar and block-backed definitions.
  bool eventually_periodic() const { return !levels_fn_; }
  /// Number of distinct level blocks (1 for self-similar).
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t repeat_from() const { return repeat_from_; }
  /// Block index used at `level`; requires eventually_periodic().
  std::size_t block_of(std::size_t level) const;
  /// Block index following `block`.
  std::size_t next_block(std::size_t block) const;
  const LevelRecursion& block(std::size_t b) const { return blocks_[b].recursion; }

  friend bool operator==(const GroupDefinition& a, const GroupDefinition& b);

 private:
  struct Block {
    LevelRecursion recursion;
    std::vector<WreathElement> inverse_images;
  };
  struct LazyLevels;

  GroupDefinition() = default;
  static Block make_block(const std::vector<std::string>& generators,
                          LevelRecursion recursion, std::size_t level);
  const Block& block_at(std::size_t level) const;

  GroupKind kind_ = GroupKind::self_similar;
  std::vector<std::string> generators_;
  std::vector<Block> blocks_;
  std::size_t repeat_from_ = 0;
  LevelFunction levels_fn_;
  std::shared_ptr<LazyLevels> lazy_;
};

}  // namespace ssg
