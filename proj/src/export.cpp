#include "ssg/export.hpp"

#include <functional>

namespace ssg {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string portrait_dot(const Portrait& p, std::span<const std::string> names) {
  std::string out = "digraph portrait {\n  node [fontname=\"monospace\"];\n";
  std::size_t next = 0;
  std::function<std::size_t(const Portrait::Node&)> emit = [&](const Portrait::Node& node) {
    const std::size_t id = next++;
    const std::string name = "n" + std::to_string(id);
    if (node.children.empty()) {
      out += "  " + name + " [shape=box, label=" + dot_quote(format_word(node.word, names)) + "];\n";
      return id;
    }
    out += "  " + name + " [shape=ellipse, label=" + dot_quote(node.perm.to_string()) + "];\n";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const std::size_t child = emit(node.children[i]);
      out += "  " + name + " -> n" + std::to_string(child) + " [label=\"" + std::to_string(i + 1) +
             "\"];\n";
    }
    return id;
  };
  emit(p.root);
  return out + "}\n";
}

std::string schreier_dot(const SchreierGraph& g, std::span<const std::string> names) {
  auto vertex = [&](std::size_t i) {
    const std::string v = format_vertex(g.vertices[i], false);
    return dot_quote(v.empty() ? "root" : v);
  };
  std::string out = "digraph schreier {\n  node [fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) out += "  " + vertex(i) + ";\n";
  for (const auto& e : g.edges)
    out += "  " + vertex(e.from) + " -> " + vertex(e.to) + " [label=" + dot_quote(names[e.generator]) +
           "];\n";
  return out + "}\n";
}

std::string activity_dot(const StateAutomaton& a) {
  const ActivityGraph graph = activity_graph(a);
  std::string out = "digraph activity {\n  node [fontname=\"monospace\"];\n";
  for (StateId s : graph.nodes) out += "  " + dot_quote(a.state_name(s)) + ";\n";
  for (StateId s : graph.nodes)
    for (std::size_t i = 0; i < a.transitions[s].size(); ++i) {
      StateId t = a.transitions[s][i];
      if (a.is_identity(t)) continue;
      out += "  " + dot_quote(a.state_name(s)) + " -> " + dot_quote(a.state_name(t)) + " [label=\"" +
             std::to_string(i + 1) + "\"];\n";
    }
  return out + "}\n";
}

std::string automaton_dot(const StateAutomaton& a) {
  std::string out = "digraph automaton {\n  node [fontname=\"monospace\"];\n";
  auto node = [&](StateId s) { return "s" + std::to_string(s); };
  for (StateId s = 0; s < a.size(); ++s)
    out += "  " + node(s) + " [label=" + dot_quote(a.state_name(s) + " " + a.perms[s].to_string()) +
           "];\n";
  for (StateId s = 0; s < a.size(); ++s)
    for (std::size_t i = 0; i < a.transitions[s].size(); ++i)
      out += "  " + node(s) + " -> " + node(a.transitions[s][i]) + " [label=\"" +
             std::to_string(i + 1) + "\"];\n";
  return out + "}\n";
}

}  // namespace ssg
