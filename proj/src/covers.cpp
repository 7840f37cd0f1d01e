#include "ssg/covers.hpp"

#include <charconv>
#include <map>

#include "ssg/errors.hpp"
#include "ssg/tree.hpp"

namespace ssg {

Word Presentation::expand(const Word& relation) const {
  Word w;
  for (Letter l : relation) {
    const Word& rep = representatives.at(l.generator);
    w *= l.inverse ? rep.inverse() : rep;
  }
  return w;
}

std::string presentation_name(const Word& representative, std::span<const std::string> names) {
  std::string s = format_word(representative, names);
  return representative.size() > 1 ? "[" + s + "]" : s;
}

namespace {

Presentation scan(const StateAutomaton& a, const ContractingModel& model,
                  std::span<const StateId> model_state, std::uint32_t layer) {
  Presentation p;
  std::vector<StateId> gens;  // model states
  for (StateId s = 0; s < a.size(); ++s)
    if (a.layer_of[s] == layer && !a.is_identity(s)) {
      gens.push_back(model_state[s]);
      p.generators.push_back(presentation_name(a.words[s], a.generator_names));
      p.representatives.push_back(a.words[s]);
    }
  const auto k = static_cast<std::uint32_t>(gens.size());
  if (k == 0) return p;
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::uint32_t> idx(len, 0);
    for (;;) {
      StateSequence seq;
      for (auto i : idx) seq.push_back(gens[i]);
      if (model.is_trivial(seq)) {
        Word w;
        for (auto i : idx) w *= Word::letter(i);
        p.relations.push_back(std::move(w));
      }
      std::size_t pos = len;
      while (pos > 0 && ++idx[pos - 1] == k) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return p;
}

}  // namespace

Presentation cover_presentation(const Nucleus& n) {
  return scan(n.automaton, *n.model, n.model_state, 0);
}

Presentation cover_presentation(const SimilarNucleus& n, std::size_t level) {
  return scan(n.automaton, *n.model, n.model_state, n.model->layer_at(level));
}

std::string FreeProductStructure::describe() const {
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : " * ") + f.describe();
  return s.empty() ? "1" : s;
}

NormalForm normal_form(const FreeProductStructure& s, const Word& w) {
  NormalForm out;
  for (Letter l : w) {
    if (l.generator >= s.assignment.size() || !s.assignment[l.generator])
      throw DefinitionError("generator " + std::to_string(l.generator) +
                            " is not assigned to a factor");
    const auto& a = *s.assignment[l.generator];
    const auto& group = s.factors.at(a.factor).group;
    std::int64_t x = a.element;
    if (l.inverse) x = group ? static_cast<std::int64_t>(group->inverse(static_cast<std::uint64_t>(x))) : -x;
    if (!out.empty() && out.back().factor == a.factor) {
      std::int64_t y = out.back().element;
      x = group ? static_cast<std::int64_t>(group->multiply(static_cast<std::uint64_t>(y),
                                                            static_cast<std::uint64_t>(x)))
                : y + x;
      out.pop_back();
    }
    if (x != 0) out.push_back({a.factor, x});
  }
  return out;
}

std::string format_normal_form(const FreeProductStructure& s, const NormalForm& nf) {
  if (nf.empty()) return "1";
  std::string out;
  for (const auto& syl : nf) {
    if (!out.empty()) out += " ";
    out += s.factors[syl.factor].describe() + "[" + std::to_string(syl.element) + "]";
  }
  return out;
}

FreeProductStructure free_structure(const GroupDefinition& g) {
  FreeProductStructure s;
  for (std::size_t k = 0; k < g.generator_count(); ++k) {
    s.factors.push_back({nullptr});
    s.assignment.push_back(FreeProductStructure::Assignment{k, 1});
  }
  return s;
}

namespace {

std::optional<std::uint64_t> to_number(std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return v;
}

FreeProductStructure sigma_structure(const GroupDefinition& g) {
  // generator names s<k> and g<i>_<k> index factor elements directly
  const std::size_t d = g.degree(0);
  std::vector<std::pair<int, std::uint64_t>> parsed;
  int top = -1;
  for (const auto& name : g.generators()) {
    std::optional<std::pair<int, std::uint64_t>> p;
    if (name.size() > 1 && name[0] == 's') {
      if (auto k = to_number(std::string_view(name).substr(1))) p = std::pair{-1, *k};
    } else if (name.size() > 1 && name[0] == 'g') {
      auto sep = name.find('_');
      if (sep != std::string::npos) {
        auto i = to_number(std::string_view(name).substr(1, sep - 1));
        auto k = to_number(std::string_view(name).substr(sep + 1));
        if (i && k) p = std::pair{static_cast<int>(*i), *k};
      }
    }
    if (!p) throw DefinitionError("generator " + name + " does not name a factor element");
    top = std::max(top, p->first);
    parsed.push_back(*p);
  }
  FreeProductStructure s;
  for (int level = -1; level <= top; ++level)
    s.factors.push_back({std::make_shared<IteratedWreathGroup>(d, level)});
  for (const auto& [level, k] : parsed)
    s.assignment.push_back(FreeProductStructure::Assignment{static_cast<std::size_t>(level + 1),
                                                            static_cast<std::int64_t>(k)});
  return s;
}

}  // namespace

FreeProductStructure builtin_cover_structure(std::string_view name, const GroupDefinition& g) {
  using A = FreeProductStructure::Assignment;
  if (name == "grigorchuk" || name == "grigorchuk_omega") {
    FreeProductStructure s;
    s.factors = {{CayleyTableGroup::cyclic(2)}, {CayleyTableGroup::klein_four()}};
    s.assignment = {A{0, 1}, A{1, 1}, A{1, 2}, A{1, 3}};
    return s;
  }
  if (name == "gupta_sidki") {
    const std::size_t p = g.degree(0);
    FreeProductStructure s;
    s.factors = {{CayleyTableGroup::cyclic(p)}, {CayleyTableGroup::cyclic(p)}};
    s.assignment = {A{0, 1}, A{1, 1}};
    return s;
  }
  if (name == "mother_bounded" || name == "pde") return sigma_structure(g);
  return free_structure(g);
}

bool kernel_membership(const GroupDefinition& g, const FreeProductStructure& s, const Word& w,
                       std::size_t n) {
  if (n == 0) return normal_form(s, w).empty();
  Portrait p = iterate(g, w, n);
  std::vector<const Portrait::Node*> stack{&p.root};
  while (!stack.empty()) {
    const Portrait::Node* node = stack.back();
    stack.pop_back();
    if (node->children.empty()) {
      if (!normal_form(s, node->word).empty()) return false;
      continue;
    }
    if (!node->perm.is_identity()) return false;
    for (const auto& c : node->children) stack.push_back(&c);
  }
  return true;
}

CoverCheck verify_cover_self_similarity(const GroupDefinition& g, const Presentation& p,
                                        const FreeProductStructure& s) {
  CoverCheck check;
  for (const Word& r : p.relations) {
    ++check.relations_checked;
    const Word w = p.expand(r);
    const std::string name = format_word(r, p.generators);
    WreathElement e = decompose(g, w);
    if (!e.perm.is_identity())
      check.violations.push_back(name + ": permutation " + e.perm.to_string());
    for (std::size_t i = 0; i < e.sections.size(); ++i)
      if (!normal_form(s, e.sections[i]).empty())
        check.violations.push_back(name + ": section " + std::to_string(i + 1) + " is " +
                                   format_word(e.sections[i], g.generators()) +
                                   ", nontrivial in the cover");
  }
  return check;
}

}  // namespace ssg
