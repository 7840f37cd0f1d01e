#include "ssg/tree.hpp"

#include <cctype>
#include <unordered_map>

#include "ssg/errors.hpp"

namespace ssg {

Vertex parse_vertex(std::string_view text) {
  Vertex v;
  bool separated = text.find_first_of(".,") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '1' || c > '9') throw DefinitionError("bad vertex letter '" + std::string(1, c) + "'");
      v.path.push_back(static_cast<std::uint32_t>(c - '1'));
    }
    return v;
  }
  std::size_t value = 0;
  bool have = false;
  auto flush = [&] {
    if (!have || value == 0) throw DefinitionError("bad vertex '" + std::string(text) + "'");
    v.path.push_back(static_cast<std::uint32_t>(value - 1));
    value = 0;
    have = false;
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      value = value * 10 + static_cast<std::size_t>(c - '0');
      have = true;
    } else if (c == '.' || c == ',') {
      flush();
    } else if (c != ' ') {
      throw DefinitionError("bad vertex letter '" + std::string(1, c) + "'");
    }
  }
  flush();
  return v;
}

std::string format_vertex(const Vertex& v, bool separated) {
  std::string out;
  for (std::size_t k = 0; k < v.path.size(); ++k) {
    if (separated && k) out += '.';
    out += std::to_string(v.path[k] + 1);
  }
  return out;
}

std::vector<Word> Portrait::leaves() const {
  std::vector<Word> out;
  std::vector<const Node*> stack{&root};
  // depth-first, children in letter order
  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    if (node->children.empty()) {
      out.push_back(node->word);
      continue;
    }
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

WreathElement decompose(const GroupDefinition& g, const Word& w, std::size_t level) {
  WreathElement result = WreathElement::identity(g.degree(level));
  for (Letter l : w) {
    if (l.generator >= g.generator_count())
      throw DefinitionError("unknown generator index " + std::to_string(l.generator));
    result = wreath_multiply(result, g.image(level, l));
  }
  return result;
}

std::size_t level_size(const GroupDefinition& g, std::size_t n, const TreeLimits& limits) {
  std::size_t size = 1;
  for (std::size_t k = 0; k < n; ++k) {
    size *= g.degree(k);
    if (size > limits.max_nodes)
      throw ResourceLimit("level " + std::to_string(n) + " has more than " +
                          std::to_string(limits.max_nodes) + " vertices");
  }
  return size;
}

namespace {

void build_portrait(const GroupDefinition& g, Portrait::Node& node, std::size_t level,
                    std::size_t remaining) {
  if (remaining == 0) return;
  WreathElement e = decompose(g, node.word, level);
  node.perm = e.perm;
  node.children.resize(e.sections.size());
  for (std::size_t i = 0; i < e.sections.size(); ++i) {
    node.children[i].word = std::move(e.sections[i]);
    build_portrait(g, node.children[i], level + 1, remaining - 1);
  }
}

}  // namespace

Portrait iterate(const GroupDefinition& g, const Word& w, std::size_t n, std::size_t level,
                 const TreeLimits& limits) {
  std::size_t nodes = 1, width = 1;
  for (std::size_t k = 0; k < n; ++k) {
    width *= g.degree(level + k);
    nodes += width;
    if (nodes > limits.max_nodes)
      throw ResourceLimit("portrait of depth " + std::to_string(n) + " exceeds " +
                          std::to_string(limits.max_nodes) + " nodes");
  }
  Portrait p;
  p.depth = n;
  p.start_level = level;
  p.root.word = w;
  p.root.perm = Permutation(g.degree(level));
  build_portrait(g, p.root, level, n);
  return p;
}

Vertex act(const GroupDefinition& g, const Word& w, const Vertex& x, std::size_t level) {
  Vertex out;
  out.path.reserve(x.path.size());
  Word current = w;
  for (std::size_t k = 0; k < x.path.size(); ++k) {
    const std::size_t d = g.degree(level + k);
    if (x.path[k] >= d)
      throw DefinitionError("vertex letter " + std::to_string(x.path[k] + 1) +
                            " out of range 1.." + std::to_string(d));
    WreathElement e = decompose(g, current, level + k);
    out.path.push_back(e.perm(x.path[k]));
    current = std::move(e.sections[x.path[k]]);
  }
  return out;
}

namespace {

struct LevelPermBuilder {
  const GroupDefinition& g;
  std::size_t target;
  std::vector<std::unordered_map<Word, std::vector<std::uint32_t>, WordHash>> memo;

  const std::vector<std::uint32_t>& images(const Word& w, std::size_t level) {
    auto& table = memo[level];
    if (auto it = table.find(w); it != table.end()) return it->second;
    std::vector<std::uint32_t> result;
    if (level == target) {
      result = {0};
    } else {
      WreathElement e = decompose(g, w, level);
      std::vector<std::vector<std::uint32_t>> children;
      for (const auto& s : e.sections) children.push_back(images(s.freely_reduced(), level + 1));
      const std::size_t sub = children[0].size();
      result.resize(sub * children.size());
      for (std::size_t i = 0; i < children.size(); ++i)
        for (std::size_t r = 0; r < sub; ++r)
          result[i * sub + r] = static_cast<std::uint32_t>(e.perm(static_cast<std::uint32_t>(i)) * sub +
                                                           children[i][r]);
    }
    return table.emplace(w, std::move(result)).first->second;
  }
};

}  // namespace

Permutation level_permutation(const GroupDefinition& g, const Word& w, std::size_t n,
                              const TreeLimits& limits) {
  level_size(g, n, limits);
  LevelPermBuilder builder{g, n, {}};
  builder.memo.resize(n + 1);
  return Permutation::from_images(builder.images(w.freely_reduced(), 0));
}

Vertex vertex_at(const GroupDefinition& g, std::size_t n, std::size_t index) {
  Vertex v;
  v.path.resize(n);
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t d = g.degree(k);
    v.path[k] = static_cast<std::uint32_t>(index % d);
    index /= d;
  }
  return v;
}

std::size_t vertex_index(const GroupDefinition& g, const Vertex& v) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < v.path.size(); ++k) index = index * g.degree(k) + v.path[k];
  return index;
}

}  // namespace ssg
