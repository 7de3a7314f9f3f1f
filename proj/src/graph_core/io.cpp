#include <istream>
#include <ostream>
#include <sstream>

#include "lamplighter/graph_core.hpp"

namespace lamplighter {

// Format:
//   # window <family> <params...>
//   # vertex <label>        (every vertex, so isolated ones survive)
//   # rim <label>
//   <label> <label>         (one edge per line)
void write_edge_list(std::ostream& out, const Graph& g) {
  if (!g.name.empty()) out << "# name " << g.name << '\n';
  if (g.is_window()) out << "# window " << g.window_family() << ' ' << g.window_params() << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "# vertex " << g.label(static_cast<Vertex>(v)) << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.on_rim(static_cast<Vertex>(v))) out << "# rim " << g.label(static_cast<Vertex>(v)) << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
      if (static_cast<Vertex>(v) < w) out << g.label(static_cast<Vertex>(v)) << ' ' << g.label(w) << '\n';
}

Graph read_edge_list(std::istream& in) {
  Graph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "#") {
      std::string kind, value;
      ls >> kind;
      if (kind == "vertex") {
        ls >> value;
        g.vertex_or_add(value);
      } else if (kind == "rim") {
        ls >> value;
        g.mark_rim(g.vertex_or_add(value));
      } else if (kind == "window") {
        std::string family, rest;
        ls >> family;
        std::getline(ls >> std::ws, rest);
        g.set_window(family, rest);
      } else if (kind == "name") {
        ls >> g.name;
      }
      continue;
    }
    std::string second;
    if (!(ls >> second)) throw invalid_argument("line " + std::to_string(lineno) + ": expected 'u v'");
    g.add_edge(g.vertex_or_add(first), g.vertex_or_add(second));
  }
  return g;
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph \"" << (g.name.empty() ? "g" : g.name) << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.label(static_cast<Vertex>(v)) << '"';
    if (g.on_rim(static_cast<Vertex>(v))) out << " [style=dashed]";
    out << ";\n";
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
      if (static_cast<Vertex>(v) < w)
        out << "  \"" << g.label(static_cast<Vertex>(v)) << "\" -- \"" << g.label(w) << "\";\n";
  out << "}\n";
}

}  // namespace lamplighter
