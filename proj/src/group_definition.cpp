#include "ssg/group_definition.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <set>

#include "ssg/errors.hpp"

namespace ssg {

struct GroupDefinition::LazyLevels {
  std::mutex mutex;
  std::deque<Block> levels;
};

namespace {

void check_generator_names(const std::vector<std::string>& names) {
  if (names.empty()) throw DefinitionError("no generators");
  std::set<std::string> seen;
  for (const auto& name : names) {
    bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
    for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw DefinitionError("invalid generator name '" + name + "'");
    if (!seen.insert(name).second) throw DefinitionError("duplicate generator '" + name + "'");
  }
}

}  // namespace

GroupDefinition::Block GroupDefinition::make_block(const std::vector<std::string>& generators,
                                                   LevelRecursion recursion, std::size_t level) {
  const std::string where = " at level " + std::to_string(level);
  if (recursion.degree < 2) throw DefinitionError("degree must be at least 2" + where);
  if (recursion.images.size() != generators.size())
    throw DefinitionError("recursion lists " + std::to_string(recursion.images.size()) +
                          " images for " + std::to_string(generators.size()) + " generators" +
                          where);
  for (std::size_t k = 0; k < recursion.images.size(); ++k) {
    const auto& image = recursion.images[k];
    if (image.perm.degree() != recursion.degree || image.sections.size() != recursion.degree)
      throw DefinitionError("degree mismatch in the image of '" + generators[k] + "'" + where);
    for (const auto& section : image.sections)
      for (Letter l : section)
        if (l.generator >= generators.size())
          throw DefinitionError("unknown generator in a section of '" + generators[k] + "'" +
                                where);
  }
  Block block;
  block.inverse_images.reserve(recursion.images.size());
  for (const auto& image : recursion.images) block.inverse_images.push_back(wreath_invert(image));
  block.recursion = std::move(recursion);
  return block;
}

GroupDefinition GroupDefinition::self_similar(std::vector<std::string> generators,
                                              LevelRecursion recursion) {
  check_generator_names(generators);
  GroupDefinition g;
  g.kind_ = GroupKind::self_similar;
  g.blocks_.push_back(make_block(generators, std::move(recursion), 0));
  g.generators_ = std::move(generators);
  return g;
}

GroupDefinition GroupDefinition::similar(std::vector<std::string> generators,
                                         std::vector<LevelRecursion> blocks,
                                         std::size_t repeat_from) {
  check_generator_names(generators);
  if (blocks.empty()) throw DefinitionError("similar definition without levels");
  if (repeat_from >= blocks.size())
    throw DefinitionError("period start " + std::to_string(repeat_from) +
                          " must name an existing level block");
  GroupDefinition g;
  g.kind_ = GroupKind::similar_sequence;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    g.blocks_.push_back(make_block(generators, std::move(blocks[i]), i));
  g.repeat_from_ = repeat_from;
  g.generators_ = std::move(generators);
  return g;
}

GroupDefinition GroupDefinition::similar(std::vector<std::string> generators,
                                         LevelFunction levels) {
  check_generator_names(generators);
  GroupDefinition g;
  g.kind_ = GroupKind::similar_sequence;
  g.generators_ = std::move(generators);
  g.levels_fn_ = std::move(levels);
  g.lazy_ = std::make_shared<LazyLevels>();
  return g;
}

std::optional<std::uint32_t> GroupDefinition::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::size_t GroupDefinition::block_of(std::size_t level) const {
  if (levels_fn_) throw DefinitionError("definition is not eventually periodic");
  if (level < blocks_.size()) return level;
  const std::size_t period = blocks_.size() - repeat_from_;
  return repeat_from_ + (level - repeat_from_) % period;
}

std::size_t GroupDefinition::next_block(std::size_t block) const {
  return block + 1 < blocks_.size() ? block + 1 : repeat_from_;
}

const GroupDefinition::Block& GroupDefinition::block_at(std::size_t level) const {
  if (!levels_fn_) return blocks_[block_of(level)];
  std::lock_guard lock(lazy_->mutex);
  while (lazy_->levels.size() <= level) {
    std::size_t n = lazy_->levels.size();
    lazy_->levels.push_back(make_block(generators_, levels_fn_(n), n));
  }
  return lazy_->levels[level];
}

const LevelRecursion& GroupDefinition::recursion(std::size_t level) const {
  return block_at(level).recursion;
}

const WreathElement& GroupDefinition::image(std::size_t level, Letter letter) const {
  const Block& b = block_at(level);
  if (letter.generator >= generators_.size())
    throw DefinitionError("unknown generator index " + std::to_string(letter.generator));
  return letter.inverse ? b.inverse_images[letter.generator] : b.recursion.images[letter.generator];
}

bool operator==(const GroupDefinition& a, const GroupDefinition& b) {
  if (a.kind_ != b.kind_ || a.generators_ != b.generators_ || a.repeat_from_ != b.repeat_from_)
    return false;
  if (a.levels_fn_ || b.levels_fn_) return a.lazy_ == b.lazy_;
  if (a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    const auto& x = a.blocks_[i].recursion;
    const auto& y = b.blocks_[i].recursion;
    if (x.degree != y.degree || x.images != y.images) return false;
  }
  return true;
}

}  // namespace ssg
