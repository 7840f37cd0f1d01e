#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/group_definition.hpp"
#include "ssg/word.hpp"

namespace ssg {

struct ContractionLimits {
  std::size_t max_depth = 24;
  std::size_t max_states = 4096;
  /// Cap on intermediate sequence sets (pair closures, visited sets).
  std::size_t max_pairs = std::size_t{1} << 22;
};

/// Exact evaluation of words over a closed automaton that contains every
/// generator letter. Products of two states that are again states are
/// tabulated on a domain of states, which lets long sequences shrink as
/// they are pushed down the tree.
class ContractingModel {
 public:
  ContractingModel(StateAutomaton automaton, std::vector<std::vector<StateId>> letter_state,
                   std::span<const StateId> table_domain, std::size_t max_pairs);

  const StateAutomaton& automaton() const { return automaton_; }
  std::size_t generator_count() const { return letter_state_.front().size() / 2; }
  std::uint32_t layer_at(std::size_t level) const;

  /// The state equal to xy, when xy is a state and both lie in the domain.
  std::optional<StateId> product(StateId x, StateId y) const;
  /// Drops identities and merges adjacent pairs through the product table.
  StateSequence reduce(StateSequence seq) const;
  StateSequence sequence(const Word& w, std::size_t level = 0) const;

  /// Depth-first search over iterated sections; throws ResourceLimit when the
  /// visited set exceeds the cap.
  bool is_trivial(const StateSequence& seq) const;
  bool is_trivial(const Word& w, std::size_t level = 0) const;

 private:
  StateAutomaton automaton_;
  std::vector<std::vector<StateId>> letter_state_;
  std::vector<std::int32_t> domain_index_;
  std::size_t domain_size_ = 0;
  std::vector<std::int32_t> table_;
  std::size_t max_visited_;
};

/// Depth m after which every section of xy is again a state of the set.
struct PairCertificate {
  StateId x = 0;
  StateId y = 0;
  std::size_t depth = 0;
};

struct Nucleus {
  /// Minimal automaton on the nucleus; state 0 is the identity, the rest
  /// follow the word order of their representatives.
  StateAutomaton automaton;
  std::size_t separation_depth = 0;
  std::vector<PairCertificate> certificate;  // non-identity ordered pairs
  std::vector<std::size_t> growth_trace;     // closure size per round
  std::shared_ptr<const ContractingModel> model;
  std::vector<StateId> model_state;  // nucleus state -> model state

  std::size_t certificate_depth() const;
};

/// A structured "not certified within bounds" answer; never a proof.
struct NotContractingReport {
  std::string reason;
  std::vector<std::size_t> growth_trace;
  std::optional<std::pair<Word, Word>> offending_pair;
};

std::variant<Nucleus, NotContractingReport> nucleus_compute(const GroupDefinition& g,
                                                            const ContractionLimits& limits = {});

struct ContractionCheck {
  bool certified = false;
  StateAutomaton automaton;  // candidate classes, when closed
  std::vector<PairCertificate> pairs;
  std::vector<std::pair<std::uint32_t, std::size_t>> generator_depths;
  std::vector<std::string> failures;
  std::shared_ptr<const ContractingModel> model;
  std::vector<StateId> model_state;
};

/// Checks that the candidate set is closed under sections (up to action
/// equality), that every generator falls into it, and that products of pairs
/// fall into it within depth_bound levels.
ContractionCheck verify_contraction(const GroupDefinition& g, const std::vector<Word>& candidates,
                                    std::size_t depth_bound, const ContractionLimits& limits = {});

/// Levelwise nucleus of an eventually periodic similar sequence, one layer
/// per level block. Without candidates, each layer is the closure of the
/// generator letters; candidates, when given, are per block.
struct SimilarNucleus {
  StateAutomaton automaton;
  std::size_t separation_depth = 0;
  std::vector<PairCertificate> certificate;
  std::shared_ptr<const ContractingModel> model;
  std::vector<StateId> model_state;

  std::size_t certificate_depth() const;
};

std::variant<SimilarNucleus, NotContractingReport> similar_nucleus(
    const GroupDefinition& g, const ContractionLimits& limits = {},
    const std::vector<std::vector<Word>>* candidates = nullptr);

bool is_trivial(const Nucleus& n, const Word& w);
bool is_trivial(const SimilarNucleus& n, const Word& w, std::size_t level = 0);
bool are_equal(const Nucleus& n, const Word& u, const Word& v);
bool are_equal(const SimilarNucleus& n, const Word& u, const Word& v, std::size_t level = 0);

/// Smallest k <= max_order with w^k trivial, or nullopt. Only multiples of
/// the order of w on a small level are tested.
std::optional<std::size_t> element_order(const GroupDefinition& g, const ContractingModel& model,
                                         const Word& w, std::size_t max_order,
                                         std::size_t level = 0);

}  // namespace ssg
