#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lamplighter/errors.hpp"

namespace lamplighter {

using Vertex = int;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

inline constexpr int kUnreachable = -1;
inline constexpr int kNoRim = std::numeric_limits<int>::max();

// Simple undirected graph with dense ids 0..n-1 and unique string labels.
//
// A graph may be a finite window of an infinite one.  In that case the
// window family/params describe where it came from, and "rim" vertices are
// the ones that lost neighbours to the truncation.
class Graph {
 public:
  Vertex add_vertex(const std::string& label);
  Vertex vertex_or_add(const std::string& label);
  // Returns false when the edge already exists.
  bool add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;

  const std::string& label(Vertex v) const;
  Vertex find(const std::string& label) const;
  std::optional<Vertex> try_find(const std::string& label) const;
  void check_vertex(Vertex v) const;

  void set_window(std::string family, std::string params);
  void mark_rim(Vertex v);
  bool is_window() const { return !window_family_.empty(); }
  bool on_rim(Vertex v) const;
  const std::string& window_family() const { return window_family_; }
  const std::string& window_params() const { return window_params_; }

  std::string name;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> rim_;
  std::unordered_map<std::string, Vertex> index_;
  std::size_t edges_ = 0;
  std::string window_family_;
  std::string window_params_;
};

VertexSet make_set(std::vector<Vertex> vs);
bool contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const Graph& g);
// Subgraph induced on s; vertex k of the result is s[k], labels kept.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Hop distances; kUnreachable for other components.
std::vector<int> distances_from(const Graph& g, Vertex source);
std::vector<int> distances_from_set(const Graph& g, const VertexSet& sources);
bool is_connected(const Graph& g);
void require_connected(const Graph& g, const std::string& what);
// Vertices of one shortest path, smallest-id neighbour first on ties.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);
  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<int> d_;
};

int set_diameter(const DistanceMatrix& dm, const VertexSet& s);

VertexSet ball(const Graph& g, Vertex v, int r);
// Outer vertex boundary: vertices outside s with a neighbour in s.
VertexSet boundary(const Graph& g, const VertexSet& s);
VertexSet thicken(const Graph& g, const VertexSet& s, int r);

// Distance from v to the nearest rim vertex, kNoRim for finite graphs.
int rim_distance(const Graph& g, Vertex v);

struct EndsRow {
  int radius = 0;
  int components = 0;
  int deep_components = 0;
  bool window_ok = true;
};

// Components of g minus B(center, r); a component is deep when it reaches
// distance >= margin from the ball.  With strict set, a window too small to
// decide throws window_error instead of flagging the row.
std::vector<EndsRow> ends_profile(const Graph& g, Vertex center, const std::vector<int>& radii,
                                  int margin, bool strict = true);

// Largest ball of radius r; on windows only centres whose ball is exact count.
std::size_t growth(const Graph& g, int r);

struct IsoResult {
  bool isomorphic = false;
  std::vector<Vertex> mapping;  // g1 vertex -> g2 vertex
  std::string refutation;
};

IsoResult isomorphic(const Graph& g1, const Graph& g2, std::size_t cap = 200);
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping);

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
Graph line_window(int lo, int hi);
Graph grid_window(int dim, int lo, int hi);
// Ball of the given radius in the d-regular tree; root is labelled "r".
Graph tree_window(int d, int radius);
// line, grid, grid-<dim>, tree-<d>, cycle-<k>, path-<k>, complete-<k>.
Graph build_family(const std::string& family, int radius);

void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
void write_dot(std::ostream& out, const Graph& g);

}  // namespace lamplighter
