#include <functional>
#include <string>

#include "lamplighter/graph_core.hpp"

namespace lamplighter {

Graph path_graph(int k) {
  if (k < 1) throw invalid_argument("path needs at least one vertex");
  Graph g;
  g.name = "path-" + std::to_string(k);
  for (int i = 0; i < k; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw invalid_argument("cycle needs at least three vertices");
  Graph g = path_graph(k);
  g.name = "cycle-" + std::to_string(k);
  g.add_edge(k - 1, 0);
  return g;
}

Graph complete_graph(int k) {
  if (k < 1) throw invalid_argument("complete graph needs at least one vertex");
  Graph g;
  g.name = "complete-" + std::to_string(k);
  for (int i = 0; i < k; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  return g;
}

Graph line_window(int lo, int hi) {
  if (lo > hi) throw invalid_argument("empty line window");
  Graph g;
  g.name = "line";
  for (int x = lo; x <= hi; ++x) g.add_vertex(std::to_string(x));
  for (int i = 0; i < hi - lo; ++i) g.add_edge(i, i + 1);
  g.set_window("line", std::to_string(lo) + ".." + std::to_string(hi));
  g.mark_rim(0);
  g.mark_rim(hi - lo);
  return g;
}

Graph grid_window(int dim, int lo, int hi) {
  if (dim < 1 || lo > hi) throw invalid_argument("bad grid window");
  const int side = hi - lo + 1;
  long total = 1;
  for (int i = 0; i < dim; ++i) total *= side;
  if (total > 2'000'000) throw cap_exceeded("grid window too large");
  Graph g;
  g.name = "grid-" + std::to_string(dim);
  std::vector<int> coord(dim);
  auto label_of = [&](long idx) {
    std::string s;
    for (int i = 0; i < dim; ++i) {
      if (i) s += ',';
      s += std::to_string(lo + static_cast<int>(idx % side));
      idx /= side;
    }
    return s;
  };
  for (long idx = 0; idx < total; ++idx) g.add_vertex(label_of(idx));
  long stride = 1;
  for (int axis = 0; axis < dim; ++axis) {
    for (long idx = 0; idx < total; ++idx)
      if ((idx / stride) % side != side - 1) g.add_edge(static_cast<Vertex>(idx), static_cast<Vertex>(idx + stride));
    stride *= side;
  }
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    for (int axis = 0; axis < dim; ++axis) {
      long c = rest % side;
      rest /= side;
      if (c == 0 || c == side - 1) {
        g.mark_rim(static_cast<Vertex>(idx));
        break;
      }
    }
  }
  g.set_window("grid", "dim=" + std::to_string(dim) + " " + std::to_string(lo) + ".." + std::to_string(hi));
  return g;
}

Graph tree_window(int d, int radius) {
  if (d < 2 || d > 10 || radius < 0) throw invalid_argument("tree window needs 2 <= d <= 10, radius >= 0");
  Graph g;
  g.name = "tree-" + std::to_string(d);
  long size = 1, layer = d;
  for (int r = 1; r <= radius; ++r, layer *= (d - 1)) size += layer;
  if (size > 2'000'000) throw cap_exceeded("tree window too large");
  std::function<void(Vertex, const std::string&, int)> grow = [&](Vertex parent, const std::string& word,
                                                                  int depth) {
    if (depth == radius) {
      if (radius > 0) g.mark_rim(parent);
      return;
    }
    const int children = depth == 0 ? d : d - 1;
    for (int letter = 0; letter < children; ++letter) {
      std::string child = word + std::to_string(letter);
      Vertex c = g.add_vertex(child);
      g.add_edge(parent, c);
      grow(c, child, depth + 1);
    }
  };
  Vertex root = g.add_vertex("r");
  grow(root, "r", 0);
  g.set_window("tree", "d=" + std::to_string(d) + " radius=" + std::to_string(radius));
  return g;
}

Graph build_family(const std::string& family, int radius) {
  auto suffix = [&](const std::string& prefix) -> int {
    if (family.rfind(prefix, 0) != 0) return -1;
    try {
      return std::stoi(family.substr(prefix.size()));
    } catch (const std::exception&) {
      throw invalid_argument("bad family parameter in " + family);
    }
  };
  if (family == "line") return line_window(-radius, radius);
  if (family == "grid") return grid_window(2, -radius, radius);
  if (int k = suffix("grid-"); k > 0) return grid_window(k, -radius, radius);
  if (int k = suffix("tree-"); k > 0) return tree_window(k, radius);
  if (int k = suffix("cycle-"); k > 0) return cycle_graph(k);
  if (int k = suffix("path-"); k > 0) return path_graph(k);
  if (int k = suffix("complete-"); k > 0) return complete_graph(k);
  throw invalid_argument("unknown graph family " + family);
}

}  // namespace lamplighter
