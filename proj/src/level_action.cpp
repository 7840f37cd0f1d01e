#include "ssg/level_action.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

TreeLimits tree_limits(const LevelLimits& limits) { return TreeLimits{limits.max_vertices}; }

std::vector<Word> default_generators(const GroupDefinition& g) {
  std::vector<Word> gens;
  for (std::uint32_t k = 0; k < g.generator_count(); ++k) gens.push_back(Word::letter(k));
  return gens;
}

}  // namespace

std::vector<Vertex> orbit(const GroupDefinition& g, const Vertex& x,
                          const std::vector<Word>& generators, const LevelLimits& limits) {
  const std::vector<Word> gens = generators.empty() ? default_generators(g) : generators;
  std::vector<Vertex> seen{x};
  std::set<Vertex> index{x};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const Word& w : gens) {
      Vertex y = act(g, w, seen[i]);
      if (index.insert(y).second) {
        if (seen.size() >= limits.max_vertices) throw ResourceLimit("orbit exceeds the vertex cap");
        seen.push_back(std::move(y));
      }
    }
  return seen;
}

std::vector<Permutation> level_generators(const GroupDefinition& g, std::size_t n,
                                          const LevelLimits& limits) {
  std::vector<Permutation> perms;
  for (std::uint32_t k = 0; k < g.generator_count(); ++k)
    perms.push_back(level_permutation(g, Word::letter(k), n, tree_limits(limits)));
  return perms;
}

SchreierGraph schreier_graph(const GroupDefinition& g, std::size_t n, const LevelLimits& limits) {
  SchreierGraph graph;
  graph.level = n;
  const std::size_t size = level_size(g, n, tree_limits(limits));
  for (std::size_t i = 0; i < size; ++i) graph.vertices.push_back(vertex_at(g, n, i));
  auto perms = level_generators(g, n, limits);
  for (std::size_t i = 0; i < size; ++i)
    for (std::uint32_t k = 0; k < perms.size(); ++k)
      graph.edges.push_back({i, perms[k](static_cast<Permutation::Point>(i)), k});
  return graph;
}

std::uint64_t level_quotient_order_bfs(const GroupDefinition& g, std::size_t n,
                                       const LevelLimits& limits) {
  auto gens = level_generators(g, n, limits);
  const std::size_t points = level_size(g, n, tree_limits(limits));
  if (points > 65536) throw ResourceLimit("level too large for enumeration");

  // elements are stored contiguously; an open-addressing table holds
  // (hash tag, index + 1) so most probes avoid touching the arena
  std::vector<std::vector<std::uint16_t>> flat;
  for (const auto& s : gens) flat.emplace_back(s.images().begin(), s.images().end());
  std::vector<std::uint16_t> arena;
  std::size_t count = 0;
  std::vector<std::uint64_t> table(1024, 0);
  auto element = [&](std::size_t i) { return arena.data() + i * points; };
  auto hash = [&](const std::uint16_t* p) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < points; ++i) h = (h ^ p[i]) * 1099511628211ull;
    return h;
  };
  auto grow = [&] {
    if (2 * count < table.size()) return;
    std::vector<std::uint64_t> bigger(table.size() * 2, 0);
    std::size_t mask = bigger.size() - 1;
    for (std::uint64_t e : table) {
      if (e == 0) continue;
      std::size_t slot = hash(element((e & 0xffffffffu) - 1)) & mask;
      while (bigger[slot] != 0) slot = (slot + 1) & mask;
      bigger[slot] = e;
    }
    table = std::move(bigger);
  };
  auto insert = [&](const std::uint16_t* p) {
    grow();
    const std::uint64_t h = hash(p);
    const std::uint64_t tag = h >> 32 << 32;
    std::size_t mask = table.size() - 1;
    for (std::size_t slot = h & mask;; slot = (slot + 1) & mask) {
      const std::uint64_t e = table[slot];
      if (e == 0) {
        if (count >= limits.max_elements)
          throw ResourceLimit("level " + std::to_string(n) + " image has more than " +
                              std::to_string(limits.max_elements) + " elements");
        arena.insert(arena.end(), p, p + points);
        table[slot] = tag | ++count;
        return;
      }
      if ((e >> 32 << 32) == tag && std::equal(p, p + points, element((e & 0xffffffffu) - 1)))
        return;
    }
  };

  std::vector<std::uint16_t> scratch(points);
  for (std::size_t i = 0; i < points; ++i) scratch[i] = static_cast<std::uint16_t>(i);
  insert(scratch.data());
  for (std::size_t next = 0; next < count; ++next)
    for (const auto& s : flat) {
      // product s * x, x applied first
      const std::uint16_t* x = element(next);
      for (std::size_t i = 0; i < points; ++i) scratch[i] = s[x[i]];
      insert(scratch.data());
    }
  return count;
}

namespace {

/// Stabilizer chain with base 0, 1, ..., degree-1. Levels are completed
/// deepest first, so sifting through the levels below the one being
/// processed is a valid membership test and every residue enlarges the chain.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree) : degree_(degree), levels_(degree) {}

  void add_generator(const Permutation& g) {
    if (auto r = sift(g, 0)) run(add(*r));
  }

  BigInt order() const {
    BigInt result = 1;
    for (const auto& level : levels_)
      if (!level.orbit.empty()) result *= level.orbit.size();
    return result;
  }

 private:
  struct Level {
    std::vector<std::optional<Permutation>> transversal;  // u with u(base) = x
    std::vector<Permutation::Point> orbit;
    std::vector<std::size_t> applied;  // per orbit point: generators processed
    std::vector<Permutation> generators;
  };

  void ensure(std::size_t k) {
    Level& level = levels_[k];
    if (!level.orbit.empty()) return;
    level.transversal.assign(degree_, std::nullopt);
    level.transversal[k] = Permutation(degree_);
    level.orbit.push_back(static_cast<Permutation::Point>(k));
    level.applied.push_back(0);
  }

  /// Residue and its level, or nullopt when g sifts to the identity.
  std::optional<std::pair<Permutation, std::size_t>> sift(Permutation g, std::size_t from) const {
    for (std::size_t k = from; k < degree_; ++k) {
      auto x = g(static_cast<Permutation::Point>(k));
      if (x == k) continue;
      const auto& level = levels_[k];
      if (level.orbit.empty() || !level.transversal[x]) return std::pair{std::move(g), k};
      g = perm_compose(level.transversal[x]->inverse(), g);
    }
    return std::nullopt;
  }

  std::size_t add(const std::pair<Permutation, std::size_t>& residue) {
    for (std::size_t k = 0; k <= residue.second; ++k) {
      ensure(k);
      levels_[k].generators.push_back(residue.first);
    }
    return residue.second;
  }

  /// Completes levels top..0; levels below `top` are complete on entry.
  void run(std::size_t top) {
    std::size_t k = top + 1;
    while (k-- > 0) {
      Level& level = levels_[k];
      bool jumped = false;
      for (std::size_t i = 0; i < level.orbit.size() && !jumped; ++i) {
        while (level.applied[i] < level.generators.size()) {
          const Permutation s = level.generators[level.applied[i]++];
          const auto x = level.orbit[i];
          const auto y = s(x);
          Permutation sx = perm_compose(s, *level.transversal[x]);
          if (!level.transversal[y]) {
            level.transversal[y] = std::move(sx);
            level.orbit.push_back(y);
            level.applied.push_back(0);
            continue;
          }
          Permutation h = perm_compose(level.transversal[y]->inverse(), sx);
          if (auto r = sift(std::move(h), k + 1)) {
            k = add(*r) + 1;  // resume at the residue's level
            jumped = true;
            break;
          }
        }
      }
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace

BigInt permutation_group_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) return 1;
  StabilizerChain chain(gens.front().degree());
  for (const auto& g : gens) chain.add_generator(g);
  return chain.order();
}

BigInt level_quotient_order(const GroupDefinition& g, std::size_t n, const LevelLimits& limits) {
  return permutation_group_order(level_generators(g, n, limits));
}

}  // namespace ssg
