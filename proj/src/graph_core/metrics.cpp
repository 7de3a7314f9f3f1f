#include <algorithm>
#include <deque>

#include "lamplighter/graph_core.hpp"

namespace lamplighter {

namespace {

// BFS truncated at radius r from a set of sources.
VertexSet bounded_bfs(const Graph& g, const VertexSet& sources, int r) {
  if (r < 0) throw invalid_argument("negative radius");
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue;
  VertexSet out;
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (dist[s] != kUnreachable) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    out.push_back(u);
    if (dist[u] == r) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return make_set(std::move(out));
}

}  // namespace

VertexSet ball(const Graph& g, Vertex v, int r) { return bounded_bfs(g, VertexSet{v}, r); }

VertexSet thicken(const Graph& g, const VertexSet& s, int r) { return bounded_bfs(g, s, r); }

VertexSet boundary(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) {
    g.check_vertex(v);
    in[v] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!in[w]) out.push_back(w);
  return make_set(std::move(out));
}

int rim_distance(const Graph& g, Vertex v) {
  g.check_vertex(v);
  if (!g.is_window()) return kNoRim;
  VertexSet rim;
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    if (g.on_rim(static_cast<Vertex>(u))) rim.push_back(static_cast<Vertex>(u));
  if (rim.empty()) return kNoRim;
  int d = distances_from_set(g, rim)[v];
  return d == kUnreachable ? kNoRim : d;
}

std::vector<EndsRow> ends_profile(const Graph& g, Vertex center, const std::vector<int>& radii,
                                  int margin, bool strict) {
  g.check_vertex(center);
  require_connected(g, "ends_profile");
  if (margin < 1) throw invalid_argument("margin must be positive");
  const auto dist = distances_from(g, center);
  const int rim = rim_distance(g, center);
  std::vector<EndsRow> rows;
  for (int r : radii) {
    if (r < 0) throw invalid_argument("negative radius");
    EndsRow row;
    row.radius = r;
    // A deep vertex at distance r+margin must have its whole margin test
    // inside the window, so the rim has to lie strictly beyond it.
    row.window_ok = rim > r + margin;
    if (!row.window_ok && strict)
      throw window_error("inconclusive at this window: rim at distance " + std::to_string(rim) +
                         " but radius+margin = " + std::to_string(r + margin));
    std::vector<int> comp(g.vertex_count(), -1);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
      if (dist[s] <= r || comp[s] != -1) continue;
      bool deep = false;
      std::deque<Vertex> queue{static_cast<Vertex>(s)};
      comp[s] = row.components;
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (dist[u] >= r + margin) deep = true;
        for (Vertex w : g.neighbors(u)) {
          if (dist[w] > r && comp[w] == -1) {
            comp[w] = row.components;
            queue.push_back(w);
          }
        }
      }
      ++row.components;
      if (deep) ++row.deep_components;
    }
    rows.push_back(row);
  }
  return rows;
}

std::size_t growth(const Graph& g, int r) {
  if (r < 0) throw invalid_argument("negative radius");
  std::vector<int> rim_dist;
  bool has_rim = false;
  if (g.is_window()) {
    VertexSet rim;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      if (g.on_rim(static_cast<Vertex>(u))) rim.push_back(static_cast<Vertex>(u));
    if (!rim.empty()) {
      has_rim = true;
      rim_dist = distances_from_set(g, rim);
    }
  }
  std::size_t best = 0;
  bool any = false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    // A rim vertex at distance exactly r still has its inner neighbours.
    if (has_rim && rim_dist[v] != kUnreachable && rim_dist[v] < r) continue;
    any = true;
    best = std::max(best, ball(g, static_cast<Vertex>(v), r).size());
  }
  if (!any) throw window_error("no window-interior centre for radius " + std::to_string(r));
  return best;
}

}  // namespace lamplighter
