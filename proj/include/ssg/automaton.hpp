#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssg/group_definition.hpp"
#include "ssg/permutation.hpp"
#include "ssg/word.hpp"

namespace ssg {

using StateId = std::uint32_t;

/// A finite automaton of tree automorphisms. States are grouped in layers
/// (one per level block); a state of layer l has its transitions in layer
/// next(l). A self-similar automaton has a single layer that is its own
/// successor. Each state carries a representative word.
struct StateAutomaton {
  struct Layer {
    std::size_t degree = 0;
    std::size_t next = 0;
    StateId identity = 0;
  };

  std::vector<std::string> generator_names;
  std::vector<Layer> layers;
  std::vector<Word> words;
  std::vector<std::uint32_t> layer_of;
  std::vector<Permutation> perms;
  std::vector<std::vector<StateId>> transitions;  // [state][letter]

  std::size_t size() const { return words.size(); }
  std::size_t degree_of(StateId s) const { return layers[layer_of[s]].degree; }
  bool is_identity(StateId s) const { return layers[layer_of[s]].identity == s; }
  std::string state_name(StateId s) const { return format_word(words[s], generator_names); }

  /// Appends a state with unset transitions.
  StateId add_state(std::uint32_t layer, Word word, Permutation perm);

  /// Closure, degree and identity invariants; throws Error on violation.
  void check_invariants() const;
};

/// Quotient by bisimulation (equality of tree actions), with classes ordered
/// by (layer, least representative word).
struct Minimization {
  StateAutomaton automaton;
  std::vector<StateId> class_of;  // original state -> class
  /// Refinement rounds that split a class: distinct classes already differ
  /// in their permutations at vertices of length <= rounds.
  std::size_t rounds = 0;
};

Minimization minimize(const StateAutomaton& a);

/// The automaton on `states` (in that order), which must be closed under
/// transitions and contain every layer's identity.
StateAutomaton subautomaton(const StateAutomaton& a, std::span<const StateId> states);

/// States lying on a cycle of the transition graph or reachable from one,
/// in increasing order.
std::vector<StateId> recurrent_closure(const StateAutomaton& a);

/// Elements as products s_1 s_2 ... s_k of states of one layer (s_k acts
/// first). Identity states are dropped by the helpers below.
using StateSequence = std::vector<StateId>;

Permutation sequence_perm(const StateAutomaton& a, std::span<const StateId> seq);
/// Section at `letter`, identity states removed.
StateSequence sequence_section(const StateAutomaton& a, std::span<const StateId> seq,
                               std::uint32_t letter);

struct SequenceHash {
  std::size_t operator()(const StateSequence& s) const noexcept;
};

/// The base automaton extended by every sequence reachable as an iterated
/// section of the seeds (sequences keep their length or shrink, so this is
/// finite). The first base.size() states are the base states.
struct SequenceClosure {
  StateAutomaton automaton;
  std::unordered_map<StateSequence, StateId, SequenceHash> index;

  /// State of a normalized sequence (identity-free); sequences of length one
  /// map to base states.
  StateId find(const StateSequence& seq, std::uint32_t layer) const;
};

/// Throws ResourceLimit when more than `max_states` sequences are created.
SequenceClosure close_sequences(const StateAutomaton& base, std::span<const StateSequence> seeds,
                                std::size_t max_states);

/// The automaton whose states are the freely reduced words reachable from the
/// generator letters (and their inverses) by taking sections, one layer per
/// level block of g. letter_state[block][letter.code()] gives each letter's
/// state.
struct LetterAutomaton {
  StateAutomaton automaton;
  std::vector<std::vector<StateId>> letter_state;
};

/// Throws ResourceLimit when the closure exceeds max_states, DefinitionError
/// for callback-backed definitions.
LetterAutomaton letter_automaton(const GroupDefinition& g, std::size_t max_states);

/// letter_automaton followed by minimize, with letter_state remapped.
LetterAutomaton minimal_letter_automaton(const GroupDefinition& g, std::size_t max_states);

}  // namespace ssg
