#include "ssg/automaton.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "ssg/errors.hpp"
#include "ssg/tree.hpp"

namespace ssg {

StateId StateAutomaton::add_state(std::uint32_t layer, Word word, Permutation perm) {
  words.push_back(std::move(word));
  layer_of.push_back(layer);
  perms.push_back(std::move(perm));
  transitions.emplace_back();
  return static_cast<StateId>(words.size() - 1);
}

void StateAutomaton::check_invariants() const {
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const StateId id = layers[l].identity;
    if (id >= size() || layer_of[id] != l) throw Error("identity state outside its layer");
    if (!perms[id].is_identity()) throw Error("identity state has a nontrivial permutation");
    for (StateId t : transitions[id])
      if (t != layers[layers[l].next].identity)
        throw Error("identity state must transition to the identity");
  }
  for (StateId s = 0; s < size(); ++s) {
    const Layer& layer = layers[layer_of[s]];
    if (perms[s].degree() != layer.degree || transitions[s].size() != layer.degree)
      throw Error("state " + std::to_string(s) + " has the wrong degree");
    for (StateId t : transitions[s])
      if (t >= size() || layer_of[t] != layer.next)
        throw Error("state " + std::to_string(s) + " transitions outside the state set");
  }
}

Minimization minimize(const StateAutomaton& a) {
  const std::size_t n = a.size();
  std::vector<StateId> cls(n);
  std::size_t classes = 0;

  // assign dense ids by sorting states on a key
  auto assign = [&](auto key_of) {
    std::vector<StateId> order(n);
    std::iota(order.begin(), order.end(), StateId{0});
    std::vector<std::vector<std::uint64_t>> keys(n);
    for (StateId s = 0; s < n; ++s) keys[s] = key_of(s);
    std::stable_sort(order.begin(), order.end(),
                     [&](StateId x, StateId y) { return keys[x] < keys[y]; });
    std::vector<StateId> next(n);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++count;
      next[order[i]] = static_cast<StateId>(count);
    }
    cls = std::move(next);
    return n ? count + 1 : 0;
  };

  classes = assign([&](StateId s) {
    std::vector<std::uint64_t> key{a.layer_of[s]};
    for (auto p : a.perms[s].images()) key.push_back(p);
    return key;
  });
  std::size_t rounds = 0;
  for (;;) {
    std::size_t refined = assign([&, prev = cls](StateId s) {
      std::vector<std::uint64_t> key{prev[s]};
      for (StateId t : a.transitions[s]) key.push_back(prev[t]);
      return key;
    });
    if (refined == classes) break;
    classes = refined;
    ++rounds;
  }

  // representatives and canonical class order
  WordOrder order(a.generator_names);
  std::vector<StateId> rep(classes, static_cast<StateId>(n));
  for (StateId s = 0; s < n; ++s) {
    StateId& r = rep[cls[s]];
    if (r == n || order(a.words[s], a.words[r])) r = s;
  }
  std::vector<StateId> by_rep(classes);
  std::iota(by_rep.begin(), by_rep.end(), StateId{0});
  std::sort(by_rep.begin(), by_rep.end(), [&](StateId x, StateId y) {
    StateId rx = rep[x], ry = rep[y];
    if (a.layer_of[rx] != a.layer_of[ry]) return a.layer_of[rx] < a.layer_of[ry];
    auto c = order.compare(a.words[rx], a.words[ry]);
    if (c != 0) return c < 0;
    return rx < ry;
  });
  std::vector<StateId> renumber(classes);
  for (std::size_t i = 0; i < classes; ++i) renumber[by_rep[i]] = static_cast<StateId>(i);

  Minimization result;
  result.rounds = rounds;
  result.class_of.resize(n);
  for (StateId s = 0; s < n; ++s) result.class_of[s] = renumber[cls[s]];
  StateAutomaton& m = result.automaton;
  m.generator_names = a.generator_names;
  m.layers = a.layers;
  for (auto& layer : m.layers) layer.identity = result.class_of[layer.identity];
  for (std::size_t i = 0; i < classes; ++i) {
    StateId r = rep[by_rep[i]];
    m.add_state(a.layer_of[r], a.words[r], a.perms[r]);
  }
  for (std::size_t i = 0; i < classes; ++i) {
    StateId r = rep[by_rep[i]];
    for (StateId t : a.transitions[r]) m.transitions[i].push_back(result.class_of[t]);
  }
  return result;
}

Permutation sequence_perm(const StateAutomaton& a, std::span<const StateId> seq) {
  if (seq.empty()) throw Error("sequence_perm of an empty sequence");
  std::vector<Permutation::Point> images(a.degree_of(seq[0]));
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  for (Permutation::Point& x : images)
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) x = a.perms[*it](x);
  return Permutation::from_images(std::move(images));
}

StateSequence sequence_section(const StateAutomaton& a, std::span<const StateId> seq,
                               std::uint32_t letter) {
  StateSequence out(seq.size());
  std::size_t kept = seq.size();
  Permutation::Point pos = letter;
  for (std::size_t k = seq.size(); k-- > 0;) {
    StateId s = seq[k];
    out[k] = a.transitions[s][pos];
    pos = a.perms[s](pos);
  }
  // drop identities, preserving order
  std::size_t w = 0;
  for (std::size_t k = 0; k < kept; ++k)
    if (!a.is_identity(out[k])) out[w++] = out[k];
  out.resize(w);
  return out;
}

std::size_t SequenceHash::operator()(const StateSequence& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (StateId x : s) h = (h ^ x) * 1099511628211ull;
  return h ^ s.size();
}

StateId SequenceClosure::find(const StateSequence& seq, std::uint32_t layer) const {
  if (seq.empty()) return automaton.layers[layer].identity;
  if (seq.size() == 1) return seq[0];
  return index.at(seq);
}

SequenceClosure close_sequences(const StateAutomaton& base, std::span<const StateSequence> seeds,
                                std::size_t max_states) {
  SequenceClosure c;
  c.automaton = base;
  StateAutomaton& a = c.automaton;
  std::deque<StateId> queue;
  std::size_t created = 0;

  auto intern = [&](const StateSequence& seq, std::uint32_t layer) -> StateId {
    if (seq.empty()) return a.layers[layer].identity;
    if (seq.size() == 1) return seq[0];
    if (auto it = c.index.find(seq); it != c.index.end()) return it->second;
    if (++created > max_states)
      throw ResourceLimit("sequence closure exceeds " + std::to_string(max_states) + " states");
    Word w;
    for (StateId s : seq) w *= base.words[s];
    StateId id = a.add_state(a.layer_of[seq[0]], w.freely_reduced(), sequence_perm(base, seq));
    c.index.emplace(seq, id);
    queue.push_back(id);
    return id;
  };

  std::vector<StateSequence> members;  // sequence of each created state
  auto sequence_of = [&](StateId id) -> StateSequence {
    return id < base.size() ? StateSequence{id} : members[id - base.size()];
  };

  for (const auto& seed : seeds) {
    StateSequence s;
    for (StateId x : seed)
      if (!base.is_identity(x)) s.push_back(x);
    if (s.size() < 2) continue;
    std::size_t before = a.size();
    intern(s, base.layer_of[s[0]]);
    if (a.size() > before) members.push_back(s);
  }
  while (!queue.empty()) {
    StateId id = queue.front();
    queue.pop_front();
    StateSequence seq = sequence_of(id);
    const std::uint32_t next = static_cast<std::uint32_t>(a.layers[a.layer_of[id]].next);
    const std::size_t d = a.degree_of(id);
    std::vector<StateId> trans(d);
    for (std::uint32_t i = 0; i < d; ++i) {
      StateSequence sec = sequence_section(base, seq, i);
      std::size_t before = a.size();
      trans[i] = intern(sec, next);
      if (a.size() > before) members.push_back(sec);
    }
    a.transitions[id] = std::move(trans);
  }
  return c;
}

LetterAutomaton letter_automaton(const GroupDefinition& g, std::size_t max_states) {
  if (!g.eventually_periodic())
    throw DefinitionError("automaton construction needs an eventually periodic definition");
  LetterAutomaton result;
  StateAutomaton& a = result.automaton;
  a.generator_names = g.generators();
  const std::size_t blocks = g.block_count();
  std::vector<std::unordered_map<Word, StateId, WordHash>> index(blocks);
  std::deque<StateId> queue;

  auto intern = [&](std::uint32_t block, Word w) -> StateId {
    w = w.freely_reduced();
    if (auto it = index[block].find(w); it != index[block].end()) return it->second;
    if (a.size() >= max_states)
      throw ResourceLimit("letter closure exceeds " + std::to_string(max_states) + " states");
    WreathElement e = decompose(g, w, block);
    StateId id = a.add_state(block, w, e.perm);
    index[block].emplace(std::move(w), id);
    queue.push_back(id);
    return id;
  };

  for (std::size_t b = 0; b < blocks; ++b)
    a.layers.push_back({g.block(b).degree, g.next_block(b), 0});
  result.letter_state.assign(blocks, std::vector<StateId>(2 * g.generator_count()));
  for (std::uint32_t b = 0; b < blocks; ++b) {
    a.layers[b].identity = intern(b, Word{});
    for (std::uint32_t k = 0; k < g.generator_count(); ++k)
      for (bool inv : {false, true}) result.letter_state[b][Letter{k, inv}.code()] = intern(b, Word::letter(k, inv));
  }
  while (!queue.empty()) {
    StateId id = queue.front();
    queue.pop_front();
    const std::uint32_t block = a.layer_of[id];
    WreathElement e = decompose(g, a.words[id], block);
    std::vector<StateId> trans;
    for (auto& s : e.sections)
      trans.push_back(intern(static_cast<std::uint32_t>(g.next_block(block)), std::move(s)));
    a.transitions[id] = std::move(trans);
  }
  return result;
}

LetterAutomaton minimal_letter_automaton(const GroupDefinition& g, std::size_t max_states) {
  LetterAutomaton raw = letter_automaton(g, max_states);
  Minimization m = minimize(raw.automaton);
  LetterAutomaton result{std::move(m.automaton), std::move(raw.letter_state)};
  for (auto& row : result.letter_state)
    for (auto& s : row) s = m.class_of[s];
  return result;
}

}  // namespace ssg

namespace ssg {

StateAutomaton subautomaton(const StateAutomaton& a, std::span<const StateId> states) {
  std::vector<std::int64_t> index(a.size(), -1);
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<std::int64_t>(i);
  StateAutomaton r;
  r.generator_names = a.generator_names;
  r.layers = a.layers;
  for (auto& layer : r.layers) {
    if (index[layer.identity] < 0) throw Error("subautomaton is missing an identity state");
    layer.identity = static_cast<StateId>(index[layer.identity]);
  }
  for (StateId s : states) r.add_state(a.layer_of[s], a.words[s], a.perms[s]);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (StateId t : a.transitions[states[i]]) {
      if (index[t] < 0) throw Error("subautomaton is not closed under sections");
      r.transitions[i].push_back(static_cast<StateId>(index[t]));
    }
  return r;
}

std::vector<StateId> recurrent_closure(const StateAutomaton& a) {
  // Tarjan's SCC, iterative
  const std::size_t n = a.size();
  std::vector<std::int64_t> low(n), num(n, -1);
  std::vector<bool> on_stack(n), cyclic(n);
  std::vector<StateId> stack;
  std::int64_t counter = 0;
  struct Frame { StateId s; std::size_t next; };
  for (StateId root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& out = a.transitions[f.s];
      if (f.next < out.size()) {
        StateId t = out[f.next++];
        if (t == f.s) cyclic[t] = true;
        if (num[t] < 0) {
          num[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = true;
          call.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.s] = std::min(low[f.s], num[t]);
        }
        continue;
      }
      StateId s = f.s;
      call.pop_back();
      if (!call.empty()) low[call.back().s] = std::min(low[call.back().s], low[s]);
      if (low[s] == num[s]) {
        std::vector<StateId> comp;
        StateId t;
        do {
          t = stack.back();
          stack.pop_back();
          on_stack[t] = false;
          comp.push_back(t);
        } while (t != s);
        if (comp.size() > 1)
          for (StateId c : comp) cyclic[c] = true;
      }
    }
  }
  std::vector<bool> keep(n);
  std::deque<StateId> queue;
  for (StateId s = 0; s < n; ++s)
    if (cyclic[s]) {
      keep[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (StateId t : a.transitions[s])
      if (!keep[t]) {
        keep[t] = true;
        queue.push_back(t);
      }
  }
  std::vector<StateId> result;
  for (StateId s = 0; s < n; ++s)
    if (keep[s]) result.push_back(s);
  return result;
}

}  // namespace ssg
