#include "ssg/activity.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ssg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t add_saturating(std::uint64_t x, std::uint64_t y) {
  return x > kSaturated - y ? kSaturated : x + y;
}

std::uint64_t pow_saturating(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < e; ++k) r = r > kSaturated / base ? kSaturated : r * base;
  return r;
}

}  // namespace

ActivityGraph activity_graph(const StateAutomaton& a) {
  ActivityGraph graph;
  std::vector<std::size_t> index(a.size(), 0);
  for (StateId s = 0; s < a.size(); ++s)
    if (!a.is_identity(s)) {
      index[s] = graph.nodes.size();
      graph.nodes.push_back(s);
    }
  graph.edges.resize(graph.nodes.size());
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    for (StateId t : a.transitions[graph.nodes[i]])
      if (!a.is_identity(t)) graph.edges[i].push_back(index[t]);
  return graph;
}

std::vector<std::vector<std::uint64_t>> activity_table(const StateAutomaton& a, std::size_t max_n) {
  std::vector<std::vector<std::uint64_t>> table;
  std::vector<std::uint64_t> row(a.size());
  for (StateId s = 0; s < a.size(); ++s) row[s] = a.is_identity(s) ? 0 : 1;
  table.push_back(row);
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::uint64_t> next(a.size(), 0);
    for (StateId s = 0; s < a.size(); ++s) {
      if (a.is_identity(s)) continue;
      for (StateId t : a.transitions[s]) next[s] = add_saturating(next[s], table.back()[t]);
    }
    table.push_back(std::move(next));
  }
  return table;
}

std::uint64_t activity_count(const StateAutomaton& a, StateId s, std::size_t n) {
  return activity_table(a, n)[n][s];
}

std::string ActivityClass::to_string() const {
  switch (kind) {
    case Kind::bounded:
      return "bounded (B = " + std::to_string(bound) + ")";
    case Kind::polynomial:
      return "polynomial of degree " + std::to_string(degree) + " (B = " + std::to_string(bound) + ")";
    case Kind::exponential:
      return "exponential";
  }
  return {};
}

ActivityClass classify_activity(const StateAutomaton& a) {
  const ActivityGraph graph = activity_graph(a);
  const std::size_t n = graph.nodes.size();

  // Tarjan's SCC, iterative; components come out in reverse topological order
  std::vector<std::int64_t> num(n, -1), low(n);
  std::vector<std::size_t> comp(n);
  std::vector<bool> on_stack(n);
  std::vector<std::size_t> stack;
  std::size_t components = 0;
  std::int64_t counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < graph.edges[v].size()) {
        std::size_t w = graph.edges[v][next++];
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
        continue;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == num[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }

  ActivityClass result;
  std::vector<std::size_t> internal(n, 0);
  std::vector<bool> cyclic(components, false);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w : graph.edges[v])
      if (comp[w] == comp[v]) {
        ++internal[v];
        cyclic[comp[v]] = true;
      }
  for (std::size_t v = 0; v < n; ++v)
    if (internal[v] > 1) {
      result.kind = ActivityClass::Kind::exponential;
      return result;
    }

  // longest chain of cyclic components; successors have smaller indices
  std::vector<std::vector<std::size_t>> members(components);
  for (std::size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);
  std::vector<std::size_t> chain(components, 0);
  std::size_t longest = 0;
  for (std::size_t c = 0; c < components; ++c) {
    std::size_t best = 0;
    for (std::size_t v : members[c])
      for (std::size_t w : graph.edges[v])
        if (comp[w] != c) best = std::max(best, chain[comp[w]]);
    chain[c] = best + (cyclic[c] ? 1 : 0);
    longest = std::max(longest, chain[c]);
  }
  result.degree = longest > 0 ? longest - 1 : 0;
  result.kind = result.degree == 0 ? ActivityClass::Kind::bounded : ActivityClass::Kind::polynomial;

  result.sampled_levels = std::min<std::size_t>(3 * std::max<std::size_t>(a.size(), 1), 128);
  auto table = activity_table(a, result.sampled_levels);
  result.state_bounds.assign(a.size(), 0);
  for (std::size_t k = result.degree == 0 ? 0 : 1; k <= result.sampled_levels; ++k) {
    const std::uint64_t scale = pow_saturating(k, result.degree);
    for (StateId s = 0; s < a.size(); ++s) {
      std::uint64_t c = table[k][s];
      std::uint64_t q = c / scale + (c % scale != 0 ? 1 : 0);
      result.state_bounds[s] = std::max(result.state_bounds[s], q);
    }
  }
  for (auto b : result.state_bounds) result.bound = std::max(result.bound, b);
  return result;
}

bool is_bireversible(const StateAutomaton& a) {
  std::set<std::pair<StateId, Permutation::Point>> images;
  for (StateId s = 0; s < a.size(); ++s)
    for (std::uint32_t i = 0; i < a.degree_of(s); ++i)
      if (!images.emplace(a.transitions[s][i], a.perms[s](i)).second) return false;
  return true;
}

}  // namespace ssg
