#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ssg/automaton.hpp"

namespace ssg {

/// Non-identity states, with one edge s -> t per letter i such that
/// transition(s, i) = t is not an identity state.
struct ActivityGraph {
  std::vector<StateId> nodes;                    // automaton states
  std::vector<std::vector<std::size_t>> edges;   // node -> targets, in letter order
};

ActivityGraph activity_graph(const StateAutomaton& a);

/// Number of non-identity sections of s on level n (saturates at UINT64_MAX).
std::uint64_t activity_count(const StateAutomaton& a, StateId s, std::size_t n);

/// counts[n][s] for n = 0..max_n, all states at once.
std::vector<std::vector<std::uint64_t>> activity_table(const StateAutomaton& a, std::size_t max_n);

struct ActivityClass {
  enum class Kind { bounded, polynomial, exponential };
  Kind kind = Kind::bounded;
  std::size_t degree = 0;  // polynomial degree; 0 when bounded
  /// Bounded: max count. Polynomial: max of count / n^degree over the sampled
  /// range. Unused for exponential growth.
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> state_bounds;  // per state, same meaning
  std::size_t sampled_levels = 0;           // counts sampled for n = 1..sampled_levels

  std::string to_string() const;
};

/// Each strongly connected component of the activity graph must be a single
/// vertex or a simple cycle, otherwise growth is exponential; the degree is
/// one less than the longest chain of cyclic components.
ActivityClass classify_activity(const StateAutomaton& a);

/// (s, i) -> (transition(s, i), perm_s(i)) is injective, identity included.
bool is_bireversible(const StateAutomaton& a);

}  // namespace ssg
