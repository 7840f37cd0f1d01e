#include "ssg/definition_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Cursor over one line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string name() {
    skip_space();
    if (pos_ >= text_.size() || !is_name_start(text_[pos_])) fail("expected a name");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000'000) fail("integer too large");
      ++pos_;
    }
    return value;
  }
  std::size_t column() {
    skip_space();
    return pos_ + 1;
  }
  [[noreturn]] void fail(const std::string& what) { fail_at(column(), what); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& what) {
    throw ParseError(line_, column, what);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Word read_word(LineCursor& cur, std::span<const std::string> names) {
  if (cur.peek() == '1') {
    std::size_t col = cur.column();
    if (cur.integer() != 1) cur.fail_at(col, "expected '1' or a generator");
    return Word{};
  }
  std::vector<Letter> letters;
  do {
    std::size_t col = cur.column();
    std::string name = cur.name();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) cur.fail_at(col, "unknown generator '" + name + "'");
    bool inverse = cur.accept('\'');
    letters.push_back(Letter{static_cast<std::uint32_t>(it - names.begin()), inverse});
  } while (cur.accept('*'));
  return Word(std::move(letters));
}

struct RawLine {
  std::size_t number;
  std::string text;
};

std::vector<RawLine> meaningful_lines(std::string_view text) {
  std::vector<RawLine> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = std::all_of(line.begin(), line.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back({number, std::move(line)});
    start = end + 1;
  }
  return out;
}

std::string first_word(const std::string& line) {
  std::istringstream in(line);
  std::string w;
  in >> w;
  if (auto colon = w.find(':'); colon != std::string::npos) w.erase(colon);
  return w;
}

struct GenLine {
  std::size_t line;
  std::string text;
};

struct LevelBlock {
  std::size_t header_line = 0;
  std::optional<std::size_t> degree;
  std::size_t degree_line = 0;
  std::vector<GenLine> gens;
};

std::string declared_name(const GenLine& gl) {
  LineCursor cur(gl.text, gl.line);
  cur.name();  // "gen"
  return cur.name();
}

WreathElement parse_gen_body(const GenLine& gl, std::size_t degree,
                             std::span<const std::string> names) {
  LineCursor cur(gl.text, gl.line);
  cur.name();
  cur.name();
  cur.expect('=');
  WreathElement e = WreathElement::identity(degree);
  bool have_sections = false, have_perm = false;
  if (cur.accept('<')) {
    have_sections = true;
    std::size_t col = cur.column();
    std::vector<Word> sections;
    sections.push_back(read_word(cur, names));
    while (cur.accept(',')) sections.push_back(read_word(cur, names));
    cur.expect('>');
    if (sections.size() != degree)
      cur.fail_at(col, "degree mismatch: " + std::to_string(sections.size()) +
                           " sections for degree " + std::to_string(degree));
    e.sections = std::move(sections);
  }
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t perm_col = cur.column();
  while (cur.accept('(')) {
    have_perm = true;
    std::vector<std::size_t> cycle;
    while (!cur.accept(')')) {
      std::size_t col = cur.column();
      std::size_t point = cur.integer();
      if (point < 1 || point > degree)
        cur.fail_at(col, "degree mismatch: point " + std::to_string(point) + " outside 1.." +
                             std::to_string(degree));
      cycle.push_back(point);
      cur.accept(',');
    }
    if (cycle.empty()) continue;
    cycles.push_back(std::move(cycle));
  }
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  if (!have_sections && !have_perm)
    cur.fail_at(perm_col, "generator needs a section list or a permutation");
  try {
    e.perm = Permutation::from_cycles(degree, cycles);
  } catch (const DefinitionError& err) {
    cur.fail_at(perm_col, std::string("non-bijective permutation: ") + err.what());
  }
  return e;
}

LevelRecursion build_level(const LevelBlock& block, const std::vector<std::string>& names,
                           std::size_t fallback_line) {
  if (!block.degree)
    throw ParseError(block.header_line ? block.header_line : fallback_line, 1,
                     "missing degree line");
  std::map<std::string, const GenLine*> by_name;
  for (const auto& gl : block.gens) {
    std::string n = declared_name(gl);
    if (!by_name.emplace(n, &gl).second)
      throw ParseError(gl.line, 1, "duplicate generator '" + n + "'");
  }
  for (const auto& [n, gl] : by_name)
    if (std::find(names.begin(), names.end(), n) == names.end())
      throw ParseError(gl->line, 1, "generator '" + n + "' not declared at level 0");
  LevelRecursion level;
  level.degree = *block.degree;
  for (const auto& n : names) {
    auto it = by_name.find(n);
    if (it == by_name.end())
      throw ParseError(block.header_line, 1, "generator '" + n + "' missing at this level");
    level.images.push_back(parse_gen_body(*it->second, level.degree, names));
  }
  return level;
}

std::size_t parse_degree_line(const RawLine& l) {
  LineCursor cur(l.text, l.number);
  cur.name();
  std::size_t col = cur.column();
  std::size_t d = cur.integer();
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  if (d < 2) cur.fail_at(col, "degree must be at least 2");
  return d;
}

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> names) {
  LineCursor cur(text, 1);
  Word w = read_word(cur, names);
  if (!cur.at_end()) cur.fail("unexpected trailing text in word");
  return w;
}

GroupDefinition parse_definition(std::string_view text) {
  auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty definition");
  const std::string header = first_word(lines[0].text);
  if (header != "selfsimilar" && header != "similar")
    throw ParseError(lines[0].number, 1, "expected header 'selfsimilar' or 'similar'");
  {
    LineCursor cur(lines[0].text, lines[0].number);
    cur.name();
    if (!cur.at_end()) cur.fail("unexpected trailing text");
  }
  const bool similar = header == "similar";

  std::vector<LevelBlock> blocks;
  std::optional<std::size_t> period;
  if (!similar) blocks.emplace_back();
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const RawLine& l = lines[k];
    const std::string kw = first_word(l.text);
    if (kw == "degree") {
      if (blocks.empty()) throw ParseError(l.number, 1, "degree line outside a level block");
      if (blocks.back().degree) throw ParseError(l.number, 1, "duplicate degree line");
      blocks.back().degree = parse_degree_line(l);
      blocks.back().degree_line = l.number;
    } else if (kw == "gen") {
      if (blocks.empty()) throw ParseError(l.number, 1, "gen line outside a level block");
      if (!blocks.back().degree) throw ParseError(l.number, 1, "gen line before degree line");
      blocks.back().gens.push_back({l.number, l.text});
    } else if (kw == "level" && similar) {
      LineCursor cur(l.text, l.number);
      cur.name();
      std::size_t col = cur.column();
      std::size_t index = cur.integer();
      cur.expect(':');
      if (!cur.at_end()) cur.fail("unexpected trailing text");
      if (index != blocks.size())
        cur.fail_at(col, "expected level " + std::to_string(blocks.size()));
      if (period) cur.fail_at(1, "level block after period line");
      blocks.emplace_back();
      blocks.back().header_line = l.number;
    } else if (kw == "period" && similar) {
      LineCursor cur(l.text, l.number);
      cur.name();
      std::size_t col = cur.column();
      std::size_t p = cur.integer();
      if (!cur.at_end()) cur.fail("unexpected trailing text");
      if (period) cur.fail_at(1, "duplicate period line");
      if (p >= blocks.size()) cur.fail_at(col, "period must name an existing level block");
      period = p;
    } else {
      throw ParseError(l.number, 1, "unexpected line starting with '" + kw + "'");
    }
  }
  if (blocks.empty()) throw ParseError(lines[0].number, 1, "no level blocks");
  if (similar && !period) throw ParseError(lines.back().number, 1, "missing period line");

  std::vector<std::string> names;
  for (const auto& gl : blocks[0].gens) names.push_back(declared_name(gl));
  if (names.empty()) throw ParseError(lines[0].number, 1, "no generators");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j])
        throw ParseError(blocks[0].gens[i].line, 1, "duplicate generator '" + names[i] + "'");
  for (const auto& n : names)
    if (n == "gen" || n == "degree")
      throw ParseError(lines[0].number, 1, "reserved generator name '" + n + "'");

  std::vector<LevelRecursion> levels;
  for (const auto& b : blocks) levels.push_back(build_level(b, names, lines[0].number));
  try {
    if (!similar) return GroupDefinition::self_similar(names, std::move(levels[0]));
    return GroupDefinition::similar(names, std::move(levels), *period);
  } catch (const DefinitionError& e) {
    throw ParseError(lines[0].number, 1, e.what());
  }
}

namespace {

void write_level(std::ostringstream& out, const GroupDefinition& g, const LevelRecursion& level) {
  out << "degree " << level.degree << '\n';
  for (std::size_t k = 0; k < g.generator_count(); ++k) {
    const auto& e = level.images[k];
    out << "gen " << g.generators()[k] << " = <";
    for (std::size_t i = 0; i < e.sections.size(); ++i) {
      if (i) out << ", ";
      out << format_word(e.sections[i], g.generators());
    }
    out << '>';
    if (!e.perm.is_identity()) out << ' ' << e.perm.to_string();
    out << '\n';
  }
}

}  // namespace

std::string serialize_definition(const GroupDefinition& g) {
  if (!g.eventually_periodic())
    throw DefinitionError("callback-backed similar sequences cannot be serialized");
  std::ostringstream out;
  if (g.kind() == GroupKind::self_similar) {
    out << "selfsimilar\n";
    write_level(out, g, g.block(0));
    return out.str();
  }
  out << "similar\n";
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    out << "level " << b << ":\n";
    write_level(out, g, g.block(b));
  }
  out << "period " << g.repeat_from() << '\n';
  return out.str();
}

}  // namespace ssg
