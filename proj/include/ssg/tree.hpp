#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/group_definition.hpp"
#include "ssg/permutation.hpp"
#include "ssg/word.hpp"
#include "ssg/wreath.hpp"

namespace ssg {

/// A vertex of the rooted tree, read root first. Letters are 0-based.
struct Vertex {
  std::vector<std::uint32_t> path;

  std::size_t level() const { return path.size(); }
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// "112" for small degrees; "1.10.3" when any level has degree > 9.
Vertex parse_vertex(std::string_view text);
std::string format_vertex(const Vertex& v, bool separated = false);

/// The finite tree of phi^depth(w): internal nodes carry the root
/// permutation of the section at that vertex, leaves the residual word.
struct Portrait {
  struct Node {
    Word word;
    Permutation perm;            // meaningful on internal nodes only
    std::vector<Node> children;  // empty on leaves
  };

  std::size_t depth = 0;
  std::size_t start_level = 0;
  Node root;

  std::vector<Word> leaves() const;
};

struct TreeLimits {
  std::size_t max_nodes = std::size_t{1} << 20;
};

/// phi_level(w), folding wreath_multiply over the letters.
WreathElement decompose(const GroupDefinition& g, const Word& w, std::size_t level = 0);

/// phi^n(w) as a portrait. Throws ResourceLimit past limits.max_nodes.
Portrait iterate(const GroupDefinition& g, const Word& w, std::size_t n,
                 std::size_t level = 0, const TreeLimits& limits = {});

/// w . x with w acting at `level`. Throws DefinitionError for letters out of
/// range.
Vertex act(const GroupDefinition& g, const Word& w, const Vertex& x, std::size_t level = 0);

/// Permutation induced by w on the d_1...d_n vertices of level n, vertices
/// indexed in lexicographic (root-first) order.
Permutation level_permutation(const GroupDefinition& g, const Word& w, std::size_t n,
                              const TreeLimits& limits = {});

/// Number of vertices on level n, or ResourceLimit past limits.max_nodes.
std::size_t level_size(const GroupDefinition& g, std::size_t n, const TreeLimits& limits = {});
Vertex vertex_at(const GroupDefinition& g, std::size_t n, std::size_t index);
std::size_t vertex_index(const GroupDefinition& g, const Vertex& v);

}  // namespace ssg
