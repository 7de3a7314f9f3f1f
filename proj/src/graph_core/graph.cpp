#include <algorithm>
#include <deque>

#include "lamplighter/graph_core.hpp"

namespace lamplighter {

Vertex Graph::add_vertex(const std::string& label) {
  if (label.empty() || label.find_first_of(" \t\n") != std::string::npos)
    throw invalid_argument("vertex label must be non-empty without whitespace: '" + label + "'");
  auto [it, inserted] = index_.emplace(label, static_cast<Vertex>(labels_.size()));
  if (!inserted) throw invalid_argument("duplicate vertex label " + label);
  labels_.push_back(label);
  adj_.emplace_back();
  rim_.push_back(0);
  return it->second;
}

Vertex Graph::vertex_or_add(const std::string& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  return add_vertex(label);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw invalid_argument("self-loop at " + labels_[u]);
  auto& nu = adj_[u];
  auto pos = std::lower_bound(nu.begin(), nu.end(), v);
  if (pos != nu.end() && *pos == v) return false;
  nu.insert(pos, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edges_;
  return true;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& n : adj_) best = std::max(best, n.size());
  return static_cast<int>(best);
}

const std::string& Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_[v];
}

Vertex Graph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw unknown_vertex("unknown vertex " + label);
  return it->second;
}

std::optional<Vertex> Graph::try_find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= labels_.size())
    throw unknown_vertex("unknown vertex id " + std::to_string(v));
}

void Graph::set_window(std::string family, std::string params) {
  window_family_ = std::move(family);
  window_params_ = std::move(params);
}

void Graph::mark_rim(Vertex v) {
  check_vertex(v);
  rim_[v] = 1;
}

bool Graph::on_rim(Vertex v) const {
  check_vertex(v);
  return rim_[v] != 0;
}

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.vertex_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(i);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  Graph out;
  out.name = g.name;
  for (Vertex v : s) out.add_vertex(g.label(v));
  for (std::size_t k = 0; k < s.size(); ++k)
    for (Vertex w : g.neighbors(s[k])) {
      auto it = std::lower_bound(s.begin(), s.end(), w);
      if (it != s.end() && *it == w && w > s[k]) out.add_edge(static_cast<Vertex>(k), static_cast<Vertex>(it - s.begin()));
    }
  return out;
}

std::vector<int> distances_from_set(const Graph& g, const VertexSet& sources) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  return distances_from_set(g, VertexSet{source});
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = distances_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

void require_connected(const Graph& g, const std::string& what) {
  if (!is_connected(g)) throw disconnected_error(what + ": graph " + g.name + " is disconnected");
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to) {
  auto dist = distances_from(g, to);
  if (dist[from] == kUnreachable)
    throw disconnected_error("no path from " + g.label(from) + " to " + g.label(to));
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()), d_(n_ * n_) {
  for (std::size_t s = 0; s < n_; ++s) {
    auto row = distances_from(g, static_cast<Vertex>(s));
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

int set_diameter(const DistanceMatrix& dm, const VertexSet& s) {
  int best = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      int d = dm(s[i], s[j]);
      if (d == kUnreachable) throw disconnected_error("set diameter across components");
      best = std::max(best, d);
    }
  return best;
}

}  // namespace lamplighter
