// ssg: command-line front end for the self-similar group library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssg/activity.hpp"
#include "ssg/catalog.hpp"
#include "ssg/contraction.hpp"
#include "ssg/covers.hpp"
#include "ssg/definition_io.hpp"
#include "ssg/errors.hpp"
#include "ssg/export.hpp"
#include "ssg/level_action.hpp"
#include "ssg/sampling.hpp"
#include "ssg/tree.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ssg;

constexpr int kSchemaVersion = 1;

enum Exit { kDefinitive = 0, kInputError = 1, kUndecided = 2 };

/// Thrown to end a command with exit code 2 after printing its output.
struct Undecided {
  std::string message;
};

struct Options {
  std::string group;
  std::vector<std::string> words;
  std::optional<std::string> vertex;
  std::size_t depth = 24;
  std::size_t max_states = 4096;
  std::size_t max_order = 256;
  std::optional<std::size_t> level;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::optional<std::string> omega;
};

struct Loaded {
  GroupDefinition definition;
  std::string builtin_name;  // empty for files
  std::string source;
};

Loaded load(const Options& o) {
  if (o.group.empty()) throw CLI::ValidationError("--group", "a group source is required");
  if (o.group.rfind("builtin:", 0) == 0) {
    std::string rest = o.group.substr(8);
    std::string name = rest, params;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      name = rest.substr(0, colon);
      params = rest.substr(colon + 1);
    }
    BuiltinParams p;
    std::stringstream ss(params);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        std::size_t used = 0;
        p.integers.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw DefinitionError("builtin parameter '" + item + "' is not an integer");
      }
    }
    if (o.omega) p.omega = OmegaSequence::parse(*o.omega);
    return {builtin(name, p), name, o.group};
  }
  if (o.omega) throw DefinitionError("--omega only applies to builtin:grigorchuk_omega");
  std::ifstream in(o.group);
  if (!in) throw DefinitionError("cannot read '" + o.group + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return {parse_definition(buffer.str()), "", o.group};
}

Word word_arg(const Options& o, const GroupDefinition& g, std::size_t index = 0) {
  if (o.words.size() <= index) throw CLI::ValidationError("--word", "missing --word argument");
  return parse_word(o.words[index], g.generators());
}

Vertex vertex_arg(const Options& o, const GroupDefinition& g, std::size_t level = 0) {
  if (!o.vertex) throw CLI::ValidationError("--vertex", "missing --vertex argument");
  Vertex v = parse_vertex(*o.vertex);
  for (std::size_t k = 0; k < v.path.size(); ++k)
    if (v.path[k] >= g.degree(level + k))
      throw DefinitionError("vertex letter " + std::to_string(v.path[k] + 1) + " at level " +
                            std::to_string(k) + " exceeds the degree " +
                            std::to_string(g.degree(level + k)));
  return v;
}

ContractionLimits limits_of(const Options& o) {
  ContractionLimits l;
  l.max_depth = o.depth;
  l.max_states = o.max_states;
  return l;
}

std::string vertex_text(const Vertex& v, const GroupDefinition& g) {
  bool wide = false;
  for (std::size_t k = 0; k < v.path.size(); ++k) wide = wide || g.degree(k) > 9;
  return format_vertex(v, wide);
}

std::string wreath_text(const WreathElement& e, const GroupDefinition& g) {
  std::string s = "<";
  for (std::size_t i = 0; i < e.sections.size(); ++i)
    s += (i ? ", " : "") + format_word(e.sections[i], g.generators());
  s += ">";
  if (!e.perm.is_identity()) s += e.perm.to_string();
  return s;
}

json wreath_json(const WreathElement& e, const GroupDefinition& g) {
  json sections = json::array();
  for (const auto& w : e.sections) sections.push_back(format_word(w, g.generators()));
  return json{{"sections", sections}, {"permutation", e.perm.to_string()}};
}

json header(const std::string& command, const Loaded& l) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}, {"group", l.source}};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void warn_omega(const Loaded& l, const Options& o) {
  if (l.builtin_name != "grigorchuk_omega") return;
  OmegaSequence w = o.omega ? OmegaSequence::parse(*o.omega) : OmegaSequence{};
  if (!w.all_symbols_recur())
    std::cerr << "warning: omega " << w.to_string()
              << " does not repeat all three epimorphisms; torsion is not expected\n";
}

std::string state_line(const StateAutomaton& a, StateId s) {
  std::string line = a.state_name(s) + " = <";
  for (std::size_t i = 0; i < a.transitions[s].size(); ++i)
    line += (i ? ", " : "") + a.state_name(a.transitions[s][i]);
  line += ">";
  if (!a.perms[s].is_identity()) line += a.perms[s].to_string();
  return line;
}

json automaton_json(const StateAutomaton& a) {
  json states = json::array();
  for (StateId s = 0; s < a.size(); ++s) {
    json sections = json::array();
    for (StateId t : a.transitions[s]) sections.push_back(t);
    states.push_back(json{{"name", a.state_name(s)},
                          {"layer", a.layer_of[s]},
                          {"permutation", a.perms[s].to_string()},
                          {"sections", sections}});
  }
  return states;
}

// A contracting model for word problems: the nucleus for self-similar
// definitions, the levelwise nucleus for similar sequences.
struct Solver {
  std::shared_ptr<const ContractingModel> model;
};

Solver solver(const Loaded& l, const Options& o) {
  const GroupDefinition& g = l.definition;
  if (g.kind() == GroupKind::self_similar) {
    auto r = nucleus_compute(g, limits_of(o));
    if (auto* rep = std::get_if<NotContractingReport>(&r))
      throw Undecided{"undecided: nucleus not certified within bounds (" + rep->reason + ")"};
    return {std::get<Nucleus>(r).model};
  }
  auto r = similar_nucleus(g, limits_of(o));
  if (auto* rep = std::get_if<NotContractingReport>(&r))
    throw Undecided{"undecided: levelwise nucleus not certified (" + rep->reason + ")"};
  return {std::get<SimilarNucleus>(r).model};
}

int cmd_define(const Loaded& l, const Options& o) {
  const std::string text = serialize_definition(l.definition);
  if (o.format == "json") {
    json j = header("define", l);
    j["kind"] = l.definition.kind() == GroupKind::self_similar ? "selfsimilar" : "similar";
    j["degree"] = l.definition.degree(0);
    j["generators"] = l.definition.generators();
    j["definition"] = text;
    print_json(j);
  } else {
    std::cout << text;
  }
  return kDefinitive;
}

int cmd_act(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  Word w = word_arg(o, g);
  Vertex x = vertex_arg(o, g);
  Vertex y = act(g, w, x);
  if (o.format == "json") {
    json j = header("act", l);
    j["word"] = format_word(w, g.generators());
    j["vertex"] = vertex_text(x, g);
    j["image"] = vertex_text(y, g);
    print_json(j);
  } else {
    std::cout << vertex_text(y, g) << "\n";
  }
  return kDefinitive;
}

int cmd_mul(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  Word u = word_arg(o, g, 0), v = word_arg(o, g, 1);
  const std::size_t level = o.level.value_or(0);
  WreathElement e = wreath_multiply(decompose(g, u, level), decompose(g, v, level));
  if (o.format == "json") {
    json j = header("mul", l);
    j["product"] = format_word(u * v, g.generators());
    j["level"] = level;
    j["image"] = wreath_json(e, g);
    print_json(j);
  } else {
    std::cout << format_word(u * v, g.generators()) << " -> " << wreath_text(e, g) << "\n";
  }
  return kDefinitive;
}

int cmd_decompose(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  Word w = word_arg(o, g);
  const std::size_t level = o.level.value_or(0);
  WreathElement e = decompose(g, w, level);
  if (o.format == "json") {
    json j = header("decompose", l);
    j["word"] = format_word(w, g.generators());
    j["level"] = level;
    j["image"] = wreath_json(e, g);
    print_json(j);
  } else {
    std::cout << wreath_text(e, g) << "\n";
  }
  return kDefinitive;
}

json portrait_json(const Portrait::Node& node, const GroupDefinition& g) {
  if (node.children.empty()) return json{{"word", format_word(node.word, g.generators())}};
  json children = json::array();
  for (const auto& c : node.children) children.push_back(portrait_json(c, g));
  return json{{"permutation", node.perm.to_string()}, {"children", children}};
}

void portrait_text(const Portrait::Node& node, Vertex& at, const GroupDefinition& g) {
  std::string name = at.path.empty() ? "root" : vertex_text(at, g);
  if (node.children.empty()) {
    std::cout << name << " = " << format_word(node.word, g.generators()) << "\n";
    return;
  }
  std::cout << name << ": " << node.perm.to_string() << "\n";
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    at.path.push_back(static_cast<std::uint32_t>(i));
    portrait_text(node.children[i], at, g);
    at.path.pop_back();
  }
}

int cmd_portrait(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  Word w = word_arg(o, g);
  Portrait p = iterate(g, w, o.level.value_or(1));
  if (o.format == "dot") {
    std::cout << portrait_dot(p, g.generators());
  } else if (o.format == "json") {
    json j = header("portrait", l);
    j["word"] = format_word(w, g.generators());
    j["depth"] = p.depth;
    j["root"] = portrait_json(p.root, g);
    print_json(j);
  } else {
    Vertex at;
    portrait_text(p.root, at, g);
  }
  return kDefinitive;
}

int cmd_orbit(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  Vertex x = vertex_arg(o, g);
  std::vector<Word> gens;
  for (std::size_t i = 0; i < o.words.size(); ++i) gens.push_back(word_arg(o, g, i));
  auto orb = orbit(g, x, gens);
  if (o.format == "json") {
    json j = header("orbit", l);
    j["vertex"] = vertex_text(x, g);
    j["size"] = orb.size();
    json list = json::array();
    for (const auto& v : orb) list.push_back(vertex_text(v, g));
    j["orbit"] = list;
    print_json(j);
  } else {
    std::cout << "orbit size " << orb.size() << "\n";
    for (const auto& v : orb) std::cout << vertex_text(v, g) << "\n";
  }
  return kDefinitive;
}

int cmd_schreier(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  SchreierGraph sg = schreier_graph(g, o.level.value_or(1));
  auto name = [&](std::size_t i) {
    std::string s = vertex_text(sg.vertices[i], g);
    return s.empty() ? std::string("root") : s;
  };
  if (o.format == "dot") {
    std::cout << schreier_dot(sg, g.generators());
  } else if (o.format == "json") {
    json j = header("schreier", l);
    j["level"] = sg.level;
    json vertices = json::array(), edges = json::array();
    for (std::size_t i = 0; i < sg.vertices.size(); ++i) vertices.push_back(name(i));
    for (const auto& e : sg.edges)
      edges.push_back(json{{"from", name(e.from)}, {"to", name(e.to)}, {"generator", g.generators()[e.generator]}});
    j["vertices"] = vertices;
    j["edges"] = edges;
    print_json(j);
  } else {
    for (const auto& e : sg.edges)
      std::cout << name(e.from) << " -" << g.generators()[e.generator] << "-> " << name(e.to) << "\n";
  }
  return kDefinitive;
}

json certificate_json(const StateAutomaton& a, const std::vector<PairCertificate>& pairs) {
  json list = json::array();
  for (const auto& p : pairs)
    list.push_back(json{{"x", a.state_name(p.x)}, {"y", a.state_name(p.y)}, {"depth", p.depth}});
  return list;
}

int report_not_contracting(const Loaded& l, const Options& o, const NotContractingReport& rep,
                           const std::string& command) {
  const auto& g = l.definition;
  if (o.format == "json") {
    json j = header(command, l);
    j["certified"] = false;
    j["reason"] = rep.reason;
    j["growth_trace"] = rep.growth_trace;
    if (rep.offending_pair)
      j["offending_pair"] = {format_word(rep.offending_pair->first, g.generators()),
                             format_word(rep.offending_pair->second, g.generators())};
    print_json(j);
  } else {
    std::cout << "not certified within bounds: " << rep.reason << "\n";
    std::cout << "growth:";
    for (auto s : rep.growth_trace) std::cout << " " << s;
    std::cout << "\n";
    if (rep.offending_pair)
      std::cout << "offending pair: " << format_word(rep.offending_pair->first, g.generators())
                << ", " << format_word(rep.offending_pair->second, g.generators()) << "\n";
    std::cout << "(a semi-decision: this does not prove the group is non-contracting)\n";
  }
  return kUndecided;
}

int cmd_nucleus(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  if (g.kind() != GroupKind::self_similar) {
    warn_omega(l, o);
    auto r = similar_nucleus(g, limits_of(o));
    if (auto* rep = std::get_if<NotContractingReport>(&r)) return report_not_contracting(l, o, *rep, "nucleus");
    const auto& n = std::get<SimilarNucleus>(r);
    const auto& a = n.automaton;
    if (o.format == "dot") {
      std::cout << automaton_dot(a);
    } else if (o.format == "json") {
      json j = header("nucleus", l);
      j["certified"] = true;
      j["level_blocks"] = a.layers.size();
      j["separation_depth"] = n.separation_depth;
      j["certificate_depth"] = n.certificate_depth();
      j["states"] = automaton_json(a);
      j["certificate"] = certificate_json(a, n.certificate);
      print_json(j);
    } else {
      for (std::size_t b = 0; b < a.layers.size(); ++b) {
        std::size_t count = 0;
        for (StateId s = 0; s < a.size(); ++s) count += a.layer_of[s] == b;
        std::cout << "level block " << b << ": " << count << " states\n";
        for (StateId s = 0; s < a.size(); ++s)
          if (a.layer_of[s] == b) std::cout << "  " << state_line(a, s) << "\n";
      }
      std::cout << "separation depth " << n.separation_depth << "\n";
      std::cout << "certified: " << n.certificate.size() << " pairs, max depth " << n.certificate_depth() << "\n";
    }
    return kDefinitive;
  }
  auto r = nucleus_compute(g, limits_of(o));
  if (auto* rep = std::get_if<NotContractingReport>(&r)) return report_not_contracting(l, o, *rep, "nucleus");
  const auto& n = std::get<Nucleus>(r);
  const auto& a = n.automaton;
  if (o.format == "dot") {
    std::cout << automaton_dot(a);
  } else if (o.format == "json") {
    json j = header("nucleus", l);
    j["certified"] = true;
    j["separation_depth"] = n.separation_depth;
    j["certificate_depth"] = n.certificate_depth();
    j["growth_trace"] = n.growth_trace;
    j["states"] = automaton_json(a);
    j["certificate"] = certificate_json(a, n.certificate);
    print_json(j);
  } else {
    std::cout << "nucleus: " << a.size() << " states\n";
    for (StateId s = 0; s < a.size(); ++s) std::cout << "  " << state_line(a, s) << "\n";
    std::cout << "separation depth " << n.separation_depth << "\n";
    std::cout << "certified: " << n.certificate.size() << " pairs, max depth " << n.certificate_depth() << "\n";
    for (const auto& p : n.certificate)
      if (p.depth > 0) std::cout << "  " << a.state_name(p.x) << "*" << a.state_name(p.y) << ": depth " << p.depth << "\n";
    std::cout << "growth:";
    for (auto s : n.growth_trace) std::cout << " " << s;
    std::cout << "\n";
  }
  return kDefinitive;
}

int cmd_verify(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  std::vector<Word> candidates;
  for (std::size_t i = 0; i < o.words.size(); ++i) candidates.push_back(word_arg(o, g, i));
  ContractionCheck c = verify_contraction(g, candidates, o.depth, limits_of(o));
  // a candidate without the identity or inverses violates the input contract
  bool structural = false, precondition = false;
  for (const auto& f : c.failures) {
    structural = structural || f.find("within depth") == std::string::npos;
    precondition = precondition || f.find("lacks the identity") != std::string::npos ||
                   f.find("is not in the candidate set") != std::string::npos;
  }
  if (o.format == "json") {
    json j = header("verify-contraction", l);
    j["certified"] = c.certified;
    j["failures"] = c.failures;
    j["pairs"] = certificate_json(c.automaton, c.pairs);
    json gens = json::array();
    for (auto [k, d] : c.generator_depths) gens.push_back(json{{"generator", g.generators()[k]}, {"depth", d}});
    j["generators"] = gens;
    print_json(j);
  } else if (c.certified) {
    std::size_t worst = 0;
    for (const auto& p : c.pairs) worst = std::max(worst, p.depth);
    std::cout << "certified: " << c.pairs.size() << " pairs, max depth " << worst << "\n";
    for (const auto& p : c.pairs)
      std::cout << "  " << c.automaton.state_name(p.x) << "*" << c.automaton.state_name(p.y) << ": depth " << p.depth << "\n";
  } else {
    std::cout << "not certified\n";
    for (const auto& f : c.failures) std::cout << "  " << f << "\n";
  }
  if (precondition) return kInputError;
  return c.certified || structural ? kDefinitive : kUndecided;
}

int cmd_wordproblem(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  Word w = word_arg(o, g);
  Solver s = solver(l, o);
  const std::size_t level = o.level.value_or(0);
  bool trivial = s.model->is_trivial(w, level);
  if (o.format == "json") {
    json j = header("wordproblem", l);
    j["word"] = format_word(w, g.generators());
    j["level"] = level;
    j["trivial"] = trivial;
    print_json(j);
  } else {
    std::cout << (trivial ? "trivial" : "nontrivial") << "\n";
  }
  return kDefinitive;
}

int cmd_equal(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  Word u = word_arg(o, g, 0), v = word_arg(o, g, 1);
  Solver s = solver(l, o);
  const std::size_t level = o.level.value_or(0);
  bool equal = s.model->is_trivial(u * v.inverse(), level);
  if (o.format == "json") {
    json j = header("equal", l);
    j["u"] = format_word(u, g.generators());
    j["v"] = format_word(v, g.generators());
    j["equal"] = equal;
    print_json(j);
  } else {
    std::cout << (equal ? "equal" : "not equal") << "\n";
  }
  return kDefinitive;
}

int cmd_order(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  warn_omega(l, o);
  Solver s = solver(l, o);
  std::vector<Word> words;
  if (o.samples > 0) {
    if (!o.words.empty()) throw CLI::ValidationError("--samples", "give either --word or --samples");
    Sampler sampler(o.seed);
    for (std::size_t i = 0; i < o.samples; ++i) words.push_back(sampler.word(g.generator_count(), 1, 8));
  } else {
    words.push_back(word_arg(o, g));
  }
  bool unknown = false;
  json list = json::array();
  for (const Word& w : words) {
    auto order = element_order(g, *s.model, w, o.max_order);
    unknown = unknown || !order;
    const std::string name = format_word(w, g.generators());
    if (o.format == "json")
      list.push_back(json{{"word", name}, {"order", order ? json(*order) : json(nullptr)}});
    else if (order)
      std::cout << (words.size() > 1 ? name + ": " : "") << *order << "\n";
    else
      std::cout << (words.size() > 1 ? name + ": " : "") << "unknown (no power up to " << o.max_order << " is trivial)\n";
  }
  if (o.format == "json") {
    json j = header("order", l);
    j["max_order"] = o.max_order;
    j["orders"] = list;
    print_json(j);
  }
  return unknown ? kUndecided : kDefinitive;
}

int cmd_presentation(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  Presentation p;
  if (g.kind() == GroupKind::self_similar) {
    auto r = nucleus_compute(g, limits_of(o));
    if (auto* rep = std::get_if<NotContractingReport>(&r)) return report_not_contracting(l, o, *rep, "presentation");
    p = cover_presentation(std::get<Nucleus>(r));
  } else {
    auto r = similar_nucleus(g, limits_of(o));
    if (auto* rep = std::get_if<NotContractingReport>(&r)) return report_not_contracting(l, o, *rep, "presentation");
    p = cover_presentation(std::get<SimilarNucleus>(r), o.level.value_or(0));
  }
  if (o.format == "json") {
    json j = header("presentation", l);
    j["generators"] = p.generators;
    json rels = json::array();
    for (const auto& r : p.relations) rels.push_back(format_word(r, p.generators));
    j["relations"] = rels;
    print_json(j);
  } else {
    std::cout << "generators";
    for (const auto& name : p.generators) std::cout << " " << name;
    std::cout << "\n";
    for (const auto& r : p.relations) std::cout << format_word(r, p.generators) << "\n";
  }
  return kDefinitive;
}

int cmd_kernel(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  Word w = word_arg(o, g);
  const std::size_t n = o.level.value_or(1);
  FreeProductStructure s = builtin_cover_structure(l.builtin_name, g);
  bool member = kernel_membership(g, s, w, n);
  if (o.format == "json") {
    json j = header("kernel", l);
    j["word"] = format_word(w, g.generators());
    j["level"] = n;
    j["cover"] = s.describe();
    j["member"] = member;
    print_json(j);
  } else {
    std::cout << (member ? "in" : "not in") << " K_" << n << " of " << s.describe() << "\n";
  }
  return kDefinitive;
}

/// The minimal letter automaton, extended by the --word element when given.
std::pair<StateAutomaton, std::optional<StateId>> activity_automaton(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  const std::size_t cap = limits_of(o).max_pairs;
  LetterAutomaton la = minimal_letter_automaton(g, cap);
  if (o.words.empty()) return {std::move(la.automaton), std::nullopt};
  Word w = word_arg(o, g);
  StateSequence seq;
  for (Letter x : w)
    if (!la.automaton.is_identity(la.letter_state[0][x.code()])) seq.push_back(la.letter_state[0][x.code()]);
  std::vector<StateSequence> seeds{seq};
  SequenceClosure c = close_sequences(la.automaton, seeds, cap);
  Minimization m = minimize(c.automaton);
  return {std::move(m.automaton), m.class_of[c.find(seq, 0)]};
}

int cmd_activity(const Loaded& l, const Options& o) {
  const auto& g = l.definition;
  auto [a, word_state] = activity_automaton(l, o);
  if (o.format == "dot") {
    std::cout << activity_dot(a);
    return kDefinitive;
  }
  ActivityClass c = classify_activity(a);
  std::vector<std::uint64_t> counts;
  if (word_state) {
    auto table = activity_table(a, o.level.value_or(8));
    for (const auto& row : table) counts.push_back(row[*word_state]);
  }
  auto kind = [&] {
    switch (c.kind) {
      case ActivityClass::Kind::bounded: return "bounded";
      case ActivityClass::Kind::polynomial: return "polynomial";
      default: return "exponential";
    }
  }();
  if (o.format == "json") {
    json j = header("activity", l);
    j["automaton_states"] = a.size();
    j["class"] = kind;
    if (c.kind != ActivityClass::Kind::exponential) {
      j["degree"] = c.degree;
      j["bound"] = c.bound;
      j["sampled_levels"] = c.sampled_levels;
      json bounds = json::object();
      for (StateId s = 0; s < a.size(); ++s)
        if (!a.is_identity(s)) bounds[a.state_name(s)] = c.state_bounds[s];
      j["state_bounds"] = bounds;
    }
    if (word_state) {
      j["word"] = format_word(word_arg(o, g), g.generators());
      j["counts"] = counts;
    }
    print_json(j);
    return kDefinitive;
  }
  std::cout << "minimized automaton: " << a.size() << " states\n";
  std::cout << "activity: " << c.to_string() << "\n";
  if (c.kind != ActivityClass::Kind::exponential && a.size() <= 64)
    for (StateId s = 0; s < a.size(); ++s)
      if (!a.is_identity(s)) std::cout << "  " << a.state_name(s) << ": " << c.state_bounds[s] << "\n";
  if (word_state) {
    std::cout << "counts for " << format_word(word_arg(o, g), g.generators()) << ":";
    for (auto x : counts) std::cout << " " << x;
    std::cout << "\n";
  }
  return kDefinitive;
}

int cmd_bireversible(const Loaded& l, const Options& o) {
  LetterAutomaton la = minimal_letter_automaton(l.definition, limits_of(o).max_pairs);
  bool b = is_bireversible(la.automaton);
  if (o.format == "json") {
    json j = header("bireversible", l);
    j["automaton_states"] = la.automaton.size();
    j["bireversible"] = b;
    print_json(j);
  } else {
    std::cout << (b ? "bireversible" : "not bireversible") << " (minimized automaton, "
              << la.automaton.size() << " states)\n";
  }
  return kDefinitive;
}

int cmd_levelorder(const Loaded& l, const Options& o) {
  const std::size_t n = o.level.value_or(1);
  BigInt order = level_quotient_order(l.definition, n);
  if (o.format == "json") {
    json j = header("levelorder", l);
    j["level"] = n;
    j["order"] = order.str();
    print_json(j);
  } else {
    std::cout << order << "\n";
  }
  return kDefinitive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in self-similar and similar groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--group", o.group, "definition file or builtin:NAME[:p1,p2]");
  app.add_option("--word", o.words, "word over the generators (repeatable)");
  app.add_option("--vertex", o.vertex, "vertex, letters 1-based, e.g. 112 or 1.10.3");
  app.add_option("--depth", o.depth, "certification depth bound")->capture_default_str();
  app.add_option("--max-states", o.max_states, "nucleus state cap")->capture_default_str();
  app.add_option("--max-order", o.max_order, "largest power tried by order")->capture_default_str();
  app.add_option("--level", o.level, "tree level (portrait depth, Schreier level, ...)");
  app.add_option("--format", o.format, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "seed for sampled words")->capture_default_str();
  app.add_option("--samples", o.samples, "order: number of sampled words of length 1..8");
  app.add_option("--omega", o.omega, "omega for grigorchuk_omega, e.g. 0(012)");

  using Handler = int (*)(const Loaded&, const Options&);
  const std::vector<std::tuple<std::string, std::string, Handler, bool>> commands = {
      {"define", "print the canonical definition", cmd_define, false},
      {"act", "image of --vertex under --word", cmd_act, false},
      {"mul", "decomposition of the product of two words", cmd_mul, false},
      {"decompose", "wreath decomposition of --word", cmd_decompose, false},
      {"portrait", "portrait of --word to depth --level", cmd_portrait, true},
      {"orbit", "orbit of --vertex", cmd_orbit, false},
      {"schreier", "Schreier graph on level --level", cmd_schreier, true},
      {"nucleus", "compute and certify the nucleus", cmd_nucleus, true},
      {"verify-contraction", "certify a candidate nucleus given as --word list", cmd_verify, false},
      {"wordproblem", "decide whether --word is trivial", cmd_wordproblem, false},
      {"equal", "decide whether two words are equal", cmd_equal, false},
      {"order", "order of --word, or of --samples random words", cmd_order, false},
      {"presentation", "contracting cover presentation", cmd_presentation, false},
      {"kernel", "membership of --word in the kernel of phi^level on the cover", cmd_kernel, false},
      {"activity", "activity growth of the minimized automaton", cmd_activity, true},
      {"bireversible", "bireversibility of the minimized automaton", cmd_bireversible, false},
      {"levelorder", "order of the image on level --level", cmd_levelorder, false},
  };
  for (const auto& [name, help, handler, dot] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kDefinitive : kInputError;
  }

  try {
    for (const auto& [name, help, handler, dot] : commands) {
      if (!app.got_subcommand(name)) continue;
      if (o.format == "dot" && !dot) throw CLI::ValidationError("--format", name + " has no DOT output");
      Loaded loaded = load(o);
      return handler(loaded, o);
    }
  } catch (const Undecided& u) {
    std::cout << u.message << "\n";
    return kUndecided;
  } catch (const CLI::Error& e) {
    std::cerr << "ssg: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceLimit& e) {
    std::cerr << "ssg: resource limit: " << e.what() << "\n";
    return kUndecided;
  } catch (const std::exception& e) {
    std::cerr << "ssg: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
