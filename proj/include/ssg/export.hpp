#pragma once

#include <span>
#include <string>

#include "ssg/activity.hpp"
#include "ssg/automaton.hpp"
#include "ssg/level_action.hpp"
#include "ssg/tree.hpp"

namespace ssg {

// Canonical DOT: nodes in preorder or index order, edges by (source, label).

std::string portrait_dot(const Portrait& p, std::span<const std::string> names);
std::string schreier_dot(const SchreierGraph& g, std::span<const std::string> names);
std::string activity_dot(const StateAutomaton& a);
std::string automaton_dot(const StateAutomaton& a);

/// Double-quoted DOT string.
std::string dot_quote(const std::string& s);

}  // namespace ssg
