#include "ssg/contraction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "ssg/errors.hpp"
#include "ssg/tree.hpp"

namespace ssg {

namespace {

constexpr std::size_t kUncertified = std::numeric_limits<std::size_t>::max();

bool same_layer(const StateAutomaton& a, StateId x, StateId y) {
  return a.layer_of[x] == a.layer_of[y];
}

}  // namespace

ContractingModel::ContractingModel(StateAutomaton automaton,
                                   std::vector<std::vector<StateId>> letter_state,
                                   std::span<const StateId> table_domain, std::size_t max_pairs)
    : automaton_(std::move(automaton)),
      letter_state_(std::move(letter_state)),
      max_visited_(max_pairs) {
  const StateAutomaton& a = automaton_;
  const std::size_t n = a.size();
  std::vector<StateId> domain;
  if (n * n <= max_pairs) {
    domain.resize(n);
    std::iota(domain.begin(), domain.end(), StateId{0});
  } else {
    domain.assign(table_domain.begin(), table_domain.end());
    if (domain.size() * domain.size() > max_pairs)
      throw ResourceLimit("product table over " + std::to_string(domain.size()) +
                          " states exceeds the pair cap");
  }
  domain_index_.assign(n, -1);
  for (std::size_t i = 0; i < domain.size(); ++i) domain_index_[domain[i]] = static_cast<std::int32_t>(i);
  domain_size_ = domain.size();
  table_.assign(domain_size_ * domain_size_, -1);

  std::vector<StateSequence> seeds;
  for (StateId x : domain)
    for (StateId y : domain)
      if (!a.is_identity(x) && !a.is_identity(y) && same_layer(a, x, y)) seeds.push_back({x, y});
  SequenceClosure closure = close_sequences(a, seeds, max_pairs);
  Minimization m = minimize(closure.automaton);
  std::vector<std::int32_t> base_of_class(m.automaton.size(), -1);
  for (StateId s = n; s-- > 0;) base_of_class[m.class_of[s]] = static_cast<std::int32_t>(s);
  for (const auto& seed : seeds) {
    StateId id = closure.find(seed, a.layer_of[seed[0]]);
    table_[domain_index_[seed[0]] * domain_size_ + domain_index_[seed[1]]] =
        base_of_class[m.class_of[id]];
  }
}

std::uint32_t ContractingModel::layer_at(std::size_t level) const {
  std::size_t layer = 0;
  for (std::size_t k = 0; k < level; ++k) layer = automaton_.layers[layer].next;
  return static_cast<std::uint32_t>(layer);
}

std::optional<StateId> ContractingModel::product(StateId x, StateId y) const {
  const auto& a = automaton_;
  if (a.is_identity(x)) return y;
  if (a.is_identity(y)) return x;
  std::int32_t dx = domain_index_[x], dy = domain_index_[y];
  if (dx < 0 || dy < 0 || !same_layer(a, x, y)) return std::nullopt;
  std::int32_t p = table_[dx * domain_size_ + dy];
  if (p < 0) return std::nullopt;
  return static_cast<StateId>(p);
}

StateSequence ContractingModel::reduce(StateSequence seq) const {
  StateSequence out;
  out.reserve(seq.size());
  for (StateId x : seq) {
    if (automaton_.is_identity(x)) continue;
    bool keep = true;
    while (!out.empty()) {
      auto p = product(out.back(), x);
      if (!p) break;
      out.pop_back();
      x = *p;
      if (automaton_.is_identity(x)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(x);
  }
  return out;
}

StateSequence ContractingModel::sequence(const Word& w, std::size_t level) const {
  const auto& row = letter_state_[layer_at(level)];
  StateSequence seq;
  seq.reserve(w.size());
  for (Letter l : w) {
    if (l.code() >= row.size()) throw DefinitionError("word uses an unknown generator");
    seq.push_back(row[l.code()]);
  }
  return reduce(std::move(seq));
}

bool ContractingModel::is_trivial(const StateSequence& start) const {
  std::unordered_set<StateSequence, SequenceHash> visited;
  std::vector<StateSequence> stack{reduce(start)};
  while (!stack.empty()) {
    StateSequence s = std::move(stack.back());
    stack.pop_back();
    if (s.empty()) continue;
    if (!sequence_perm(automaton_, s).is_identity()) return false;
    if (!visited.insert(s).second) continue;
    if (visited.size() > max_visited_)
      throw ResourceLimit("word problem search exceeds " + std::to_string(max_visited_) +
                          " sections");
    const std::size_t d = automaton_.degree_of(s[0]);
    for (std::uint32_t i = 0; i < d; ++i)
      stack.push_back(reduce(sequence_section(automaton_, s, i)));
  }
  return true;
}

bool ContractingModel::is_trivial(const Word& w, std::size_t level) const {
  return is_trivial(sequence(w, level));
}

namespace {

/// Certificate depths for ordered non-identity pairs of `members` (a closed
/// set of model states). Entries are kUncertified past max_depth.
std::vector<PairCertificate> certify_pairs(const ContractingModel& model,
                                           std::span<const StateId> members,
                                           std::size_t max_depth) {
  const StateAutomaton& a = model.automaton();
  std::vector<std::int64_t> index(a.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<std::int64_t>(i);
  const std::size_t m = members.size();
  auto pair_index = [&](StateId x, StateId y) { return index[x] * m + index[y]; };

  std::vector<PairCertificate> pairs;
  std::vector<std::int64_t> slot(m * m, -1);
  for (StateId x : members)
    for (StateId y : members)
      if (!a.is_identity(x) && !a.is_identity(y) && same_layer(a, x, y)) {
        slot[pair_index(x, y)] = static_cast<std::int64_t>(pairs.size());
        pairs.push_back({x, y, kUncertified});
      }
  std::vector<bool> good(pairs.size());
  std::vector<std::vector<std::size_t>> succ(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto prod = model.product(pairs[p].x, pairs[p].y);
    good[p] = prod && index[*prod] >= 0;
    if (good[p]) continue;
    const StateId xy[2] = {pairs[p].x, pairs[p].y};
    for (std::uint32_t i = 0; i < a.degree_of(pairs[p].x); ++i) {
      StateSequence sec = sequence_section(a, xy, i);
      if (sec.size() == 2) succ[p].push_back(static_cast<std::size_t>(slot[pair_index(sec[0], sec[1])]));
    }
  }
  std::vector<std::size_t> depth(pairs.size(), kUncertified);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (good[p]) depth[p] = 0;
  for (std::size_t round = 0; round <= max_depth; ++round) {
    bool changed = false;
    std::vector<std::size_t> next = depth;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (good[p]) continue;
      std::size_t d = 1;
      for (std::size_t q : succ[p]) {
        if (depth[q] == kUncertified) {
          d = kUncertified;
          break;
        }
        d = std::max(d, depth[q] + 1);
      }
      if (d != kUncertified && d > max_depth) d = kUncertified;
      if (d != next[p]) {
        next[p] = d;
        changed = true;
      }
    }
    depth = std::move(next);
    if (!changed) break;
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) pairs[p].depth = depth[p];
  return pairs;
}

/// Certificates re-indexed into the subautomaton on `members`.
std::vector<PairCertificate> reindex(std::vector<PairCertificate> pairs,
                                     std::span<const StateId> members) {
  std::unordered_map<StateId, StateId> index;
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<StateId>(i);
  for (auto& p : pairs) {
    p.x = index.at(p.x);
    p.y = index.at(p.y);
  }
  return pairs;
}

std::size_t max_depth_of(const std::vector<PairCertificate>& pairs) {
  std::size_t m = 0;
  for (const auto& p : pairs) m = std::max(m, p.depth);
  return m;
}

const PairCertificate* first_uncertified(const std::vector<PairCertificate>& pairs) {
  for (const auto& p : pairs)
    if (p.depth == kUncertified) return &p;
  return nullptr;
}

}  // namespace

std::size_t Nucleus::certificate_depth() const { return max_depth_of(certificate); }
std::size_t SimilarNucleus::certificate_depth() const { return max_depth_of(certificate); }

std::variant<Nucleus, NotContractingReport> nucleus_compute(const GroupDefinition& g,
                                                            const ContractionLimits& limits) {
  if (g.kind() != GroupKind::self_similar)
    throw DefinitionError("nucleus computation needs a self-similar definition");
  LetterAutomaton la = minimal_letter_automaton(g, limits.max_pairs);
  StateAutomaton c = std::move(la.automaton);
  auto letters = std::move(la.letter_state);
  std::vector<std::size_t> trace{c.size()};

  auto too_many = [&]() -> std::optional<NotContractingReport> {
    if (c.size() <= limits.max_states) return std::nullopt;
    return NotContractingReport{"closure reached " + std::to_string(c.size()) +
                                    " states, above max-states " +
                                    std::to_string(limits.max_states),
                                trace, std::nullopt};
  };
  if (auto r = too_many()) return *r;

  std::vector<bool> frontier(c.size(), true);
  for (;;) {
    std::vector<StateSequence> seeds;
    for (StateId x = 0; x < c.size(); ++x)
      for (StateId y = 0; y < c.size(); ++y) {
        if (c.is_identity(x) || c.is_identity(y) || !(frontier[x] || frontier[y])) continue;
        const StateId xy[2] = {x, y};
        for (std::uint32_t i = 0; i < c.degree_of(x); ++i) {
          StateSequence sec = sequence_section(c, xy, i);
          if (sec.size() == 2) seeds.push_back(std::move(sec));
        }
      }
    if (seeds.size() > limits.max_pairs)
      throw ResourceLimit("nucleus round needs " + std::to_string(seeds.size()) + " pairs");
    SequenceClosure closure = close_sequences(c, seeds, limits.max_pairs);
    if (closure.automaton.size() == c.size()) break;
    Minimization m = minimize(closure.automaton);
    if (m.automaton.size() == c.size()) break;
    std::vector<bool> next(m.automaton.size(), true);
    for (StateId s = 0; s < c.size(); ++s) next[m.class_of[s]] = false;
    for (auto& row : letters)
      for (auto& s : row) s = m.class_of[s];
    c = std::move(m.automaton);
    frontier = std::move(next);
    trace.push_back(c.size());
    if (auto r = too_many()) return *r;
  }

  std::vector<StateId> members = recurrent_closure(c);
  auto model = std::make_shared<const ContractingModel>(c, letters, members, limits.max_pairs);
  auto pairs = certify_pairs(*model, members, limits.max_depth);
  if (const PairCertificate* bad = first_uncertified(pairs))
    return NotContractingReport{"pair " + c.state_name(bad->x) + ", " + c.state_name(bad->y) +
                                    " not certified within depth " +
                                    std::to_string(limits.max_depth),
                                trace, std::pair{c.words[bad->x], c.words[bad->y]}};

  Nucleus n;
  n.automaton = subautomaton(c, members);
  n.separation_depth = minimize(n.automaton).rounds;
  n.certificate = reindex(std::move(pairs), members);
  n.growth_trace = std::move(trace);
  n.model = std::move(model);
  n.model_state = std::move(members);
  return n;
}

namespace {

/// Shared by verify_contraction and similar_nucleus. A null candidate list
/// takes every state of the minimal letter automaton.
ContractionCheck check_candidates(const GroupDefinition& g,
                                  const std::vector<std::vector<Word>>* candidates,
                                  std::size_t depth_bound, const ContractionLimits& limits) {
  ContractionCheck check;
  LetterAutomaton la = minimal_letter_automaton(g, limits.max_pairs);
  const StateAutomaton& base = la.automaton;
  const std::size_t blocks = base.layers.size();
  if (candidates && candidates->size() != blocks)
    throw DefinitionError("expected candidate sets for " + std::to_string(blocks) + " level blocks");

  auto to_sequence = [&](const Word& w, std::size_t block) {
    StateSequence seq;
    for (Letter l : w) {
      if (l.generator >= g.generator_count()) throw DefinitionError("candidate uses an unknown generator");
      StateId s = la.letter_state[block][l.code()];
      if (!base.is_identity(s)) seq.push_back(s);
    }
    return seq;
  };
  std::vector<StateSequence> seeds;
  if (candidates)
    for (std::size_t b = 0; b < blocks; ++b)
      for (const Word& w : (*candidates)[b]) {
        seeds.push_back(to_sequence(w, b));
        seeds.push_back(to_sequence(w.inverse(), b));
      }
  SequenceClosure closure = close_sequences(base, seeds, limits.max_pairs);
  Minimization m = minimize(closure.automaton);
  const StateAutomaton& a = m.automaton;
  auto letters = la.letter_state;
  for (auto& row : letters)
    for (auto& s : row) s = m.class_of[s];
  auto class_of_word = [&](const Word& w, std::size_t b) {
    return m.class_of[closure.find(to_sequence(w, b), static_cast<std::uint32_t>(b))];
  };

  std::vector<bool> member(a.size(), candidates == nullptr);
  if (candidates) {
    for (std::size_t b = 0; b < blocks; ++b)
      for (const Word& w : (*candidates)[b]) member[class_of_word(w, b)] = true;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::string where = blocks > 1 ? " at block " + std::to_string(b) : "";
      if (!member[a.layers[b].identity]) check.failures.push_back("candidate set" + where + " lacks the identity");
      for (const Word& w : (*candidates)[b])
        if (!member[class_of_word(w.inverse(), b)])
          check.failures.push_back("inverse of " + format_word(w, g.generators()) +
                                   " is not in the candidate set" + where);
    }
  }
  bool closed = true;
  for (StateId s = 0; s < a.size(); ++s) {
    if (!member[s]) continue;
    for (std::uint32_t i = 0; i < a.degree_of(s); ++i)
      if (!member[a.transitions[s][i]]) {
        closed = false;
        check.failures.push_back("section " + std::to_string(i + 1) + " of " + a.state_name(s) +
                                 " is " + a.state_name(a.transitions[s][i]) +
                                 ", outside the candidate set");
      }
  }
  for (std::uint32_t k = 0; k < g.generator_count(); ++k) {
    std::size_t worst = 0;
    bool reached = true;
    for (std::size_t b = 0; b < blocks && reached; ++b) {
      std::vector<StateId> level{letters[b][Letter{k, false}.code()]};
      std::size_t depth = 0;
      while (!std::all_of(level.begin(), level.end(), [&](StateId s) { return member[s]; })) {
        if (++depth > depth_bound) {
          reached = false;
          break;
        }
        std::vector<StateId> next;
        for (StateId s : level)
          for (StateId t : a.transitions[s]) next.push_back(t);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
      }
      worst = std::max(worst, depth);
    }
    if (reached)
      check.generator_depths.emplace_back(k, worst);
    else
      check.failures.push_back("generator " + g.generators()[k] +
                               " does not fall into the candidate set within depth " +
                               std::to_string(depth_bound));
  }
  if (!closed) return check;

  std::vector<StateId> members;
  for (StateId s = 0; s < a.size(); ++s)
    if (member[s]) members.push_back(s);
  auto model = std::make_shared<const ContractingModel>(a, letters, members, limits.max_pairs);
  auto pairs = certify_pairs(*model, members, depth_bound);
  for (const auto& p : pairs)
    if (p.depth == kUncertified)
      check.failures.push_back("pair " + a.state_name(p.x) + ", " + a.state_name(p.y) +
                               " not certified within depth " + std::to_string(depth_bound));
  check.automaton = subautomaton(a, members);
  check.pairs = reindex(std::move(pairs), members);
  check.model = std::move(model);
  check.model_state = std::move(members);
  check.certified = check.failures.empty();
  return check;
}

}  // namespace

ContractionCheck verify_contraction(const GroupDefinition& g, const std::vector<Word>& candidates,
                                    std::size_t depth_bound, const ContractionLimits& limits) {
  if (g.kind() != GroupKind::self_similar)
    throw DefinitionError("verify_contraction needs a self-similar definition");
  std::vector<std::vector<Word>> per_block{candidates};
  return check_candidates(g, &per_block, depth_bound, limits);
}

std::variant<SimilarNucleus, NotContractingReport> similar_nucleus(
    const GroupDefinition& g, const ContractionLimits& limits,
    const std::vector<std::vector<Word>>* candidates) {
  if (!g.eventually_periodic())
    throw DefinitionError("levelwise nucleus needs an eventually periodic definition");
  ContractionCheck check = check_candidates(g, candidates, limits.max_depth, limits);
  if (!check.certified) {
    std::string reason = check.failures.empty() ? "not certified" : check.failures.front();
    if (check.failures.size() > 1)
      reason += " (and " + std::to_string(check.failures.size() - 1) + " more)";
    return NotContractingReport{reason, {check.automaton.size()}, std::nullopt};
  }
  SimilarNucleus n;
  n.separation_depth = minimize(check.automaton).rounds;
  n.automaton = std::move(check.automaton);
  n.certificate = std::move(check.pairs);
  n.model = std::move(check.model);
  n.model_state = std::move(check.model_state);
  return n;
}

bool is_trivial(const Nucleus& n, const Word& w) { return n.model->is_trivial(w); }

bool is_trivial(const SimilarNucleus& n, const Word& w, std::size_t level) {
  return n.model->is_trivial(w, level);
}

bool are_equal(const Nucleus& n, const Word& u, const Word& v) {
  return n.model->is_trivial(u * v.inverse());
}

bool are_equal(const SimilarNucleus& n, const Word& u, const Word& v, std::size_t level) {
  return n.model->is_trivial(u * v.inverse(), level);
}

std::optional<std::size_t> element_order(const GroupDefinition& g, const ContractingModel& model,
                                         const Word& w, std::size_t max_order, std::size_t level) {
  if (model.is_trivial(w, level)) return 1;
  std::uint64_t step = 1;
  if (level == 0) {
    std::size_t depth = 0, size = 1;
    while (size * g.degree(depth) <= 4096) size *= g.degree(depth++);
    if (depth > 0) step = level_permutation(g, w, depth).order();
  }
  if (step > max_order) return std::nullopt;
  for (std::size_t k = step; k <= max_order; k += step)
    if (model.is_trivial(w.power(k), level)) return k;
  return std::nullopt;
}

}  // namespace ssg
