#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/group_definition.hpp"

namespace ssg {

/// An eventually periodic word over {0,1,2}; written "pre(period)".
struct OmegaSequence {
  std::string preperiod;
  std::string period = "012";

  static OmegaSequence parse(std::string_view text);
  int symbol(std::size_t n) const;
  std::string to_string() const;
  /// True when each of 0, 1, 2 occurs in the period (infinitely often).
  bool all_symbols_recur() const;
};

/// Images of b, c, d under the epimorphism labeled `symbol`: true means "a",
/// false the identity. 0, 1, 2 kill d, c, b respectively.
std::array<bool, 3> omega_epimorphism(int symbol);

struct BuiltinParams {
  std::vector<long long> integers;
  std::optional<OmegaSequence> omega;
};

struct CatalogEntry {
  std::string name;
  std::string parameters;  // human-readable, e.g. "p (prime >= 3, default 3)"
  std::function<GroupDefinition(const BuiltinParams&)> construct;
};

/// Caps the number of generators produced by materializing finite factors.
inline constexpr std::size_t max_expanded_generators = 20000;

const std::vector<CatalogEntry>& catalog();

/// Throws DefinitionError for unknown names or parameters out of range.
GroupDefinition builtin(std::string_view name, const BuiltinParams& params = {});

/// Generator names used for the free-product factors of mother_bounded and
/// pde: "s<k>" for Sym(d), "g<i>_<k>" for Sigma_i.
std::string factor_generator_name(int level, std::uint64_t element);

}  // namespace ssg
