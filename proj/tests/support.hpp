#pragma once

#include <string>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/catalog.hpp"
#include "ssg/definition_io.hpp"
#include "ssg/tree.hpp"
#include "ssg/word.hpp"

namespace ssg::test {

inline Word w(const GroupDefinition& g, const std::string& text) {
  return parse_word(text, g.generators());
}

inline GroupDefinition grigorchuk() { return builtin("grigorchuk"); }
inline GroupDefinition gupta_sidki(long long p = 3) { return builtin("gupta_sidki", {{p}, {}}); }

inline GroupDefinition omega(const std::string& text) {
  BuiltinParams p;
  p.omega = OmegaSequence::parse(text);
  return builtin("grigorchuk_omega", p);
}

inline Vertex v(const std::string& text) { return parse_vertex(text); }

/// Every vertex on levels 0..n, level by level.
inline std::vector<Vertex> vertices_up_to(const GroupDefinition& g, std::size_t n) {
  std::vector<Vertex> out;
  for (std::size_t level = 0; level <= n; ++level) {
    const std::size_t size = level_size(g, level);
    for (std::size_t i = 0; i < size; ++i) out.push_back(vertex_at(g, level, i));
  }
  return out;
}

/// Brute force: w fixes every vertex of levels <= n.
inline bool acts_trivially(const GroupDefinition& g, const Word& word, std::size_t n) {
  const std::size_t size = level_size(g, n);
  for (std::size_t i = 0; i < size; ++i) {
    Vertex x = vertex_at(g, n, i);
    if (act(g, word, x) != x) return false;
  }
  return true;
}

/// Level-n permutations of the generator letters, composed along words.
class LevelImages {
 public:
  LevelImages(const GroupDefinition& g, std::size_t n) {
    for (std::uint32_t k = 0; k < g.generator_count(); ++k) {
      const Permutation p = level_permutation(g, Word::letter(k), n);
      letters_.push_back(p);
      letters_.push_back(p.inverse());
    }
    size_ = level_size(g, n);
  }

  /// The word fixes every vertex of level n (and so every level above).
  bool trivial(const Word& word) const {
    std::vector<Permutation::Point> images(size_);
    for (std::size_t i = 0; i < size_; ++i) images[i] = static_cast<Permutation::Point>(i);
    for (std::size_t j = word.size(); j-- > 0;) {
      const Permutation& p = letters_[word[j].code()];
      for (auto& x : images) x = p(x);
    }
    for (std::size_t i = 0; i < size_; ++i)
      if (images[i] != i) return false;
    return true;
  }

 private:
  std::vector<Permutation> letters_;
  std::size_t size_ = 0;
};

/// The part of the automaton reachable from the roots, identities included.
/// index maps old states to new ones (size() when dropped).
struct Trimmed {
  StateAutomaton automaton;
  std::vector<StateId> index;
};

inline Trimmed reachable_part(const StateAutomaton& a, std::vector<StateId> roots) {
  std::vector<bool> seen(a.size());
  for (const auto& layer : a.layers) roots.push_back(layer.identity);
  std::vector<StateId> stack;
  for (StateId r : roots)
    if (!seen[r]) seen[r] = true, stack.push_back(r);
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (StateId t : a.transitions[s])
      if (!seen[t]) seen[t] = true, stack.push_back(t);
  }
  std::vector<StateId> states;
  Trimmed out;
  out.index.assign(a.size(), static_cast<StateId>(a.size()));
  for (StateId s = 0; s < a.size(); ++s)
    if (seen[s]) out.index[s] = static_cast<StateId>(states.size()), states.push_back(s);
  out.automaton = subautomaton(a, states);
  return out;
}

/// The automaton as a group definition with one generator "q<i>" per state.
/// Layer l is level block l; states of other layers act trivially there.
inline GroupDefinition automaton_definition(const StateAutomaton& a) {
  std::vector<std::string> names;
  for (StateId s = 0; s < a.size(); ++s) names.push_back("q" + std::to_string(s));
  std::vector<LevelRecursion> blocks;
  for (std::size_t l = 0; l < a.layers.size(); ++l) {
    LevelRecursion r;
    r.degree = a.layers[l].degree;
    for (StateId s = 0; s < a.size(); ++s) {
      WreathElement e = WreathElement::identity(r.degree);
      if (a.layer_of[s] == l) {
        e.perm = a.perms[s];
        for (std::size_t i = 0; i < r.degree; ++i) e.sections[i] = Word::letter(a.transitions[s][i]);
      }
      r.images.push_back(std::move(e));
    }
    blocks.push_back(std::move(r));
  }
  if (blocks.size() == 1) return GroupDefinition::self_similar(names, std::move(blocks[0]));
  return GroupDefinition::similar(names, std::move(blocks), a.layers.back().next);
}

}  // namespace ssg::test
