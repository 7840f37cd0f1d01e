#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ssg/group_definition.hpp"
#include "ssg/tree.hpp"
#include "ssg/word.hpp"

namespace ssg {

using BigInt = boost::multiprecision::cpp_int;

struct LevelLimits {
  std::size_t max_vertices = std::size_t{1} << 16;  // level size
  std::size_t max_elements = std::size_t{1} << 23;  // BFS enumeration
};

/// BFS closure of x under the given words (all generator letters when empty),
/// in discovery order.
std::vector<Vertex> orbit(const GroupDefinition& g, const Vertex& x,
                          const std::vector<Word>& generators = {}, const LevelLimits& limits = {});

struct SchreierGraph {
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::uint32_t generator = 0;
  };
  std::size_t level = 0;
  std::vector<Vertex> vertices;  // lexicographic
  std::vector<Edge> edges;       // by (from, generator)
};

SchreierGraph schreier_graph(const GroupDefinition& g, std::size_t n, const LevelLimits& limits = {});

/// The generators as permutations of the level-n vertices.
std::vector<Permutation> level_generators(const GroupDefinition& g, std::size_t n,
                                          const LevelLimits& limits = {});

/// Order of the level-n image by enumerating its elements. Throws
/// ResourceLimit past limits.max_elements.
std::uint64_t level_quotient_order_bfs(const GroupDefinition& g, std::size_t n,
                                       const LevelLimits& limits = {});

/// Order of the level-n image from a stabilizer chain; exact for any size.
BigInt level_quotient_order(const GroupDefinition& g, std::size_t n, const LevelLimits& limits = {});

/// Order of the permutation group generated by `gens` (Schreier-Sims on the
/// base 0, 1, ..., degree-1).
BigInt permutation_group_order(const std::vector<Permutation>& gens);

}  // namespace ssg
