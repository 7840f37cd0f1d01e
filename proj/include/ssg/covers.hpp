#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/contraction.hpp"
#include "ssg/finite_groups.hpp"
#include "ssg/group_definition.hpp"
#include "ssg/word.hpp"

namespace ssg {

/// Generators are the non-identity nucleus classes. Relations are words over
/// those generators (positive letters), ordered by length then letters.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> representatives;  // each generator as a word of the definition
  std::vector<Word> relations;

  /// Substitutes representatives, giving a word over the definition.
  Word expand(const Word& relation) const;
};

/// All trivial words of length 1 to 3 over the nucleus classes.
Presentation cover_presentation(const Nucleus& n);
/// The level-n cover of a similar sequence.
Presentation cover_presentation(const SimilarNucleus& n, std::size_t level = 0);

/// "[a*b]" for classes represented by longer words.
std::string presentation_name(const Word& representative, std::span<const std::string> names);

/// A free product of finite groups and infinite cyclic groups, with each
/// generator of a definition assigned to one factor element.
struct FreeProductStructure {
  struct Factor {
    std::shared_ptr<const FiniteGroup> group;  // null: infinite cyclic
    std::string describe() const { return group ? group->describe() : "Z"; }
  };
  struct Assignment {
    std::size_t factor = 0;
    std::int64_t element = 0;  // exponent for infinite cyclic factors
  };

  std::vector<Factor> factors;
  std::vector<std::optional<Assignment>> assignment;  // per definition generator

  std::string describe() const;
};

struct Syllable {
  std::size_t factor = 0;
  std::int64_t element = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};
using NormalForm = std::vector<Syllable>;

/// Throws DefinitionError for unassigned generators.
NormalForm normal_form(const FreeProductStructure& s, const Word& w);
std::string format_normal_form(const FreeProductStructure& s, const NormalForm& nf);

/// One infinite cyclic factor per generator.
FreeProductStructure free_structure(const GroupDefinition& g);

/// The free product decomposition known for a builtin family:
/// C2 * V4 (grigorchuk, grigorchuk_omega), Cp * Cp (gupta_sidki), the
/// Sym(d) and Sigma_i factors (mother_bounded, pde); free otherwise.
FreeProductStructure builtin_cover_structure(std::string_view name, const GroupDefinition& g);

/// phi^n(w) has trivial permutations and every leaf is trivial in the cover.
bool kernel_membership(const GroupDefinition& g, const FreeProductStructure& s, const Word& w,
                       std::size_t n);

struct CoverCheck {
  std::size_t relations_checked = 0;
  std::vector<std::string> violations;
};

/// Every relation must decompose into trivial cover elements under a
/// trivial permutation.
CoverCheck verify_cover_self_similarity(const GroupDefinition& g, const Presentation& p,
                                        const FreeProductStructure& s);

}  // namespace ssg
