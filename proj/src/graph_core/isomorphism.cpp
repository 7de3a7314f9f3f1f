#include <algorithm>
#include <deque>
#include <map>

#include "lamplighter/graph_core.hpp"

namespace lamplighter {

namespace {

// Joint colour refinement of two graphs so that colours are comparable.
// Returns colour per vertex for each graph.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<int> c1(n1), c2(n2);
  for (std::size_t v = 0; v < n1; ++v) c1[v] = g1.degree(static_cast<Vertex>(v));
  for (std::size_t v = 0; v < n2; ++v) c2[v] = g2.degree(static_cast<Vertex>(v));
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    std::map<Signature, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& col, Vertex v) {
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(col[w]);
      std::sort(around.begin(), around.end());
      return Signature{col[v], std::move(around)};
    };
    std::vector<Signature> s1(n1), s2(n2);
    for (std::size_t v = 0; v < n1; ++v) s1[v] = signature(g1, c1, static_cast<Vertex>(v));
    for (std::size_t v = 0; v < n2; ++v) s2[v] = signature(g2, c2, static_cast<Vertex>(v));
    for (const auto& s : s1) ids.emplace(s, 0);
    for (const auto& s : s2) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n1; ++v) c1[v] = ids[s1[v]];
    for (std::size_t v = 0; v < n2; ++v) c2[v] = ids[s2[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {c1, c2};
}

struct Matcher {
  const Graph& g1;
  const Graph& g2;
  const std::vector<int>& col1;
  const std::vector<int>& col2;
  std::vector<Vertex> order;
  std::vector<Vertex> map12, map21;
  std::size_t steps = 0;
  static constexpr std::size_t kStepBudget = 50'000'000;

  bool feasible(Vertex v, Vertex x) const {
    if (col1[v] != col2[x] || map21[x] != -1) return false;
    int mapped1 = 0, mapped2 = 0;
    for (Vertex w : g1.neighbors(v)) {
      if (map12[w] == -1) continue;
      ++mapped1;
      if (!g2.adjacent(map12[w], x)) return false;
    }
    for (Vertex y : g2.neighbors(x))
      if (map21[y] != -1) ++mapped2;
    return mapped1 == mapped2;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    if (++steps > kStepBudget) throw cap_exceeded("isomorphism search step budget exhausted");
    const Vertex v = order[depth];
    std::vector<Vertex> candidates;
    Vertex anchor = -1;
    for (Vertex w : g1.neighbors(v))
      if (map12[w] != -1) {
        anchor = w;
        break;
      }
    if (anchor != -1) {
      candidates = g2.neighbors(map12[anchor]);
    } else {
      candidates.resize(g2.vertex_count());
      for (std::size_t x = 0; x < candidates.size(); ++x) candidates[x] = static_cast<Vertex>(x);
    }
    for (Vertex x : candidates) {
      if (!feasible(v, x)) continue;
      map12[v] = x;
      map21[x] = v;
      if (extend(depth + 1)) return true;
      map12[v] = -1;
      map21[x] = -1;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (mapping.size() != g1.vertex_count()) return false;
  std::vector<char> hit(g2.vertex_count(), 0);
  for (Vertex x : mapping) {
    if (x < 0 || static_cast<std::size_t>(x) >= g2.vertex_count() || hit[x]) return false;
    hit[x] = 1;
  }
  for (std::size_t v = 0; v < g1.vertex_count(); ++v)
    for (Vertex w : g1.neighbors(static_cast<Vertex>(v)))
      if (!g2.adjacent(mapping[v], mapping[w])) return false;
  return true;
}

IsoResult isomorphic(const Graph& g1, const Graph& g2, std::size_t cap) {
  if (g1.vertex_count() > cap || g2.vertex_count() > cap)
    throw cap_exceeded("isomorphism size cap " + std::to_string(cap) + " exceeded");
  IsoResult result;
  if (g1.vertex_count() != g2.vertex_count()) {
    result.refutation = "vertex counts differ";
    return result;
  }
  if (g1.edge_count() != g2.edge_count()) {
    result.refutation = "edge counts differ";
    return result;
  }
  auto degrees = [](const Graph& g) {
    std::vector<int> d;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(static_cast<Vertex>(v)));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g1) != degrees(g2)) {
    result.refutation = "degree sequences differ";
    return result;
  }
  auto [col1, col2] = refine(g1, g2);
  {
    auto h1 = col1, h2 = col2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) {
      result.refutation = "colour refinement class sizes differ";
      return result;
    }
  }

  // Visit g1 in BFS order, each component started from its rarest colour so
  // that later vertices always have a mapped neighbour to anchor on.
  std::map<int, int> class_size;
  for (int c : col1) ++class_size[c];
  std::vector<Vertex> by_rarity(g1.vertex_count());
  for (std::size_t v = 0; v < by_rarity.size(); ++v) by_rarity[v] = static_cast<Vertex>(v);
  std::stable_sort(by_rarity.begin(), by_rarity.end(), [&](Vertex a, Vertex b) {
    return std::pair(class_size[col1[a]], col1[a]) < std::pair(class_size[col1[b]], col1[b]);
  });
  Matcher m{g1, g2, col1, col2, {}, std::vector<Vertex>(g1.vertex_count(), -1),
            std::vector<Vertex>(g2.vertex_count(), -1)};
  std::vector<char> seen(g1.vertex_count(), 0);
  for (Vertex root : by_rarity) {
    if (seen[root]) continue;
    std::deque<Vertex> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      m.order.push_back(u);
      for (Vertex w : g1.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
  }
  if (m.extend(0)) {
    result.isomorphic = true;
    result.mapping = m.map12;
    if (!is_isomorphism(g1, g2, result.mapping))
      throw error("internal: isomorphism witness failed verification");
  } else {
    result.refutation = "exhaustive backtracking found no adjacency-preserving bijection";
  }
  return result;
}

}  // namespace lamplighter
