#pragma once

// Slow, obviously-correct reference computations used by the tests.

#include <algorithm>
#include <climits>
#include <functional>
#include <random>
#include <vector>

#include "lamplighter/graph_core.hpp"

namespace oracle {

using lamplighter::Graph;
using lamplighter::Vertex;

// Shortest length over all simple paths from source, by exhaustive DFS.
inline std::vector<int> all_paths_distances(const Graph& g, Vertex source) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> best(n, INT_MAX);
  std::vector<char> on_path(n, 0);
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int len) {
    best[v] = std::min(best[v], len);
    on_path[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (!on_path[w]) dfs(w, len + 1);
    on_path[v] = 0;
  };
  dfs(source, 0);
  for (int& b : best)
    if (b == INT_MAX) b = lamplighter::kUnreachable;
  return best;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Fixed-endpoint travelling-salesman path by trying every order.
inline int brute_force_ts(const std::function<int(Vertex, Vertex)>& dist, Vertex start, std::vector<Vertex> stops,
                          Vertex end) {
  std::sort(stops.begin(), stops.end());
  int best = INT_MAX;
  do {
    int len = 0;
    Vertex cur = start;
    for (Vertex s : stops) {
      len += dist(cur, s);
      cur = s;
    }
    len += dist(cur, end);
    best = std::min(best, len);
  } while (std::next_permutation(stops.begin(), stops.end()));
  return best;
}

// Truncated cube built by cutting every corner of the 3-cube: each corner
// (x,y,z) is replaced by three vertices, one per incident cube edge.
inline Graph truncated_cube() {
  Graph g;
  auto name = [](int corner, int axis) { return "c" + std::to_string(corner) + "a" + std::to_string(axis); };
  for (int corner = 0; corner < 8; ++corner)
    for (int axis = 0; axis < 3; ++axis) g.add_vertex(name(corner, axis));
  for (int corner = 0; corner < 8; ++corner) {
    // Triangle at the cut corner.
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) g.add_edge(g.find(name(corner, a)), g.find(name(corner, b)));
    // What remains of each cube edge.
    for (int axis = 0; axis < 3; ++axis) {
      int other = corner ^ (1 << axis);
      if (corner < other) g.add_edge(g.find(name(corner, axis)), g.find(name(other, axis)));
    }
  }
  return g;
}

}  // namespace oracle
