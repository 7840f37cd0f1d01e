#pragma once

#include <span>
#include <string>
#include <string_view>

#include "ssg/group_definition.hpp"
#include "ssg/word.hpp"

namespace ssg {

/// Parses the definition file format (see docs/formats.md). Throws
/// ParseError with line and column.
GroupDefinition parse_definition(std::string_view text);

/// Canonical text; parse_definition(serialize_definition(g)) == g. Throws
/// DefinitionError for callback-backed similar sequences.
std::string serialize_definition(const GroupDefinition& g);

/// "1" or atoms NAME["'"] joined by '*'. Throws ParseError (column only,
/// line 1) on bad syntax or unknown generators.
Word parse_word(std::string_view text, std::span<const std::string> names);

}  // namespace ssg
