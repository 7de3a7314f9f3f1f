#include <deque>

#include "lamplighter/wreath_group.hpp"

namespace lamplighter {

namespace {

TreePoint child(const TreePoint& p, int letter) {
  TreePoint c = p;
  ++c.level;
  if (letter != 0) c.word[c.level] = letter;
  return c;
}

TreePoint parent(const TreePoint& p) {
  TreePoint c = p;
  c.word.erase(c.level);
  --c.level;
  return c;
}

}  // namespace

bool tree_adjacent(const TreePoint& a, const TreePoint& b) {
  if (a.level + 1 == b.level) return parent(b) == a;
  if (b.level + 1 == a.level) return parent(a) == b;
  return false;
}

bool dl_adjacent(const DLPoint& x, const DLPoint& y) {
  return tree_adjacent(x.first, y.first) && tree_adjacent(x.second, y.second) &&
         (y.first.level - x.first.level) == -(y.second.level - x.second.level);
}

std::vector<DLPoint> dl_neighbors(int n, const DLPoint& x) {
  if (n < 2) throw invalid_argument("DL(n) needs n >= 2");
  std::vector<DLPoint> out;
  for (int letter = 0; letter < n; ++letter) out.emplace_back(child(x.first, letter), parent(x.second));
  for (int letter = 0; letter < n; ++letter) out.emplace_back(parent(x.first), child(x.second, letter));
  return out;
}

DLPoint dl_root() { return {TreePoint{-1, {}}, TreePoint{1, {}}}; }

std::string format_tree_point(const TreePoint& p) {
  std::string s = std::to_string(p.level) + "[";
  bool first = true;
  for (const auto& [at, v] : p.word) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(at) + ':' + std::to_string(v);
  }
  return s + "]";
}

std::string format_dl_point(const DLPoint& p) {
  return "(" + format_tree_point(p.first) + "|" + format_tree_point(p.second) + ")";
}

Graph dl_graph(int n, int depth, std::size_t cap) {
  if (depth < 0) throw invalid_argument("negative depth");
  Graph g;
  g.name = "DL(" + std::to_string(n) + ")";
  std::map<DLPoint, std::pair<Vertex, int>> seen;
  std::deque<DLPoint> queue;
  auto visit = [&](const DLPoint& p, int d) {
    if (seen.size() >= cap) throw cap_exceeded("DL window cap " + std::to_string(cap) + " exceeded");
    seen.emplace(p, std::pair{g.add_vertex(format_dl_point(p)), d});
    queue.push_back(p);
  };
  visit(dl_root(), 0);
  while (!queue.empty()) {
    DLPoint p = queue.front();
    queue.pop_front();
    auto [id, d] = seen.at(p);
    for (const auto& q : dl_neighbors(n, p)) {
      auto it = seen.find(q);
      if (it == seen.end()) {
        if (d == depth) {
          g.mark_rim(id);
          continue;
        }
        visit(q, d + 1);
        it = seen.find(q);
      }
      g.add_edge(id, it->second.first);
    }
  }
  g.set_window("dl", "n=" + std::to_string(n) + " depth=" + std::to_string(depth));
  return g;
}

DLPoint psi_embed(const WreathGroup& g, const WreathElement& x) {
  if (g.rank() != 1 || g.base_moduli[0] != 0 || g.lamp_modulus < 2)
    throw invalid_argument("psi_embed needs Z_n wr Z with n >= 2");
  check_element(g, x);
  const long p = x.base[0];
  DLPoint out{TreePoint{p - 1, {}}, TreePoint{1 - p, {}}};
  for (const auto& [at, v] : x.lamps) {
    const long b = at[0];
    if (b <= p - 1)
      out.first.word[b] = static_cast<int>(v);
    else
      out.second.word[1 - b] = static_cast<int>(v);
  }
  return out;
}

}  // namespace lamplighter
