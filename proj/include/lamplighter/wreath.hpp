#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lamplighter/graph_core.hpp"

namespace lamplighter {

// Finitely supported colouring of the base graph: base vertex -> lamp vertex.
// Canonical form never stores the basepoint colour.
using Colouring = std::map<Vertex, int>;

struct LampVertex {
  Colouring colours;
  Vertex arrow = 0;
  auto operator<=>(const LampVertex&) const = default;
};

// (X, o) wr Y.  For the lamplighter L_n(Y) the lamp graph is K_n with o = 0.
class WreathSpace {
 public:
  WreathSpace(Graph lamp, Vertex basepoint, Graph base);
  static WreathSpace lamplighter(int n, Graph base);

  const Graph& lamp() const { return lamp_; }
  const Graph& base() const { return base_; }
  Vertex basepoint() const { return basepoint_; }
  int lamp_size() const { return static_cast<int>(lamp_.vertex_count()); }
  // n for L_n, 0 for a general lamp graph.
  int modulus() const { return modulus_; }
  const DistanceMatrix& base_metric() const { return base_dm_; }
  const DistanceMatrix& lamp_metric() const { return lamp_dm_; }
  int base_distance(Vertex p, Vertex q) const { return base_dm_(p, q); }
  int colour_distance(int a, int b) const { return lamp_dm_(a, b); }

  int colour_at(const Colouring& c, Vertex q) const;
  Colouring canonical(Colouring c) const;
  void validate(const LampVertex& v) const;

  // {label:colour,...}@label, entries sorted by vertex id.
  std::string format(const LampVertex& v) const;
  LampVertex parse(const std::string& text) const;
  std::string describe() const;

 private:
  Graph lamp_;
  Vertex basepoint_;
  Graph base_;
  int modulus_ = 0;
  DistanceMatrix lamp_dm_;
  DistanceMatrix base_dm_;
};

// Lamps where the two colourings differ.
VertexSet colouring_difference(const Colouring& a, const Colouring& b);
VertexSet support(const Colouring& c);
// Pointwise sum/difference mod n.
Colouring add_colourings(int n, const Colouring& a, const Colouring& b);
Colouring subtract_colourings(int n, const Colouring& a, const Colouring& b);

std::vector<LampVertex> neighbors(const WreathSpace& w, const LampVertex& v);

struct LampWindow {
  Graph graph;
  std::vector<LampVertex> points;
  std::map<LampVertex, Vertex> index;
  Vertex id(const LampVertex& v) const;
};

inline constexpr std::size_t kDefaultMaterializeCap = 1'000'000;

// All (c, p) with supp(c) in support_window and p in arrow_window.
LampWindow materialize(const WreathSpace& w, const VertexSet& support_window, const VertexSet& arrow_window,
                       std::size_t cap = kDefaultMaterializeCap);
LampWindow materialize_full(const WreathSpace& w, std::size_t cap = kDefaultMaterializeCap);

inline constexpr int kHeldKarpCap = 20;

struct TsResult {
  int length = 0;
  std::vector<Vertex> order;
};

// Shortest walk start -> end through every vertex of must_visit (exact).
TsResult ts_path(const WreathSpace& w, Vertex start, const VertexSet& must_visit, Vertex end,
                 int cap = kHeldKarpCap);
// Same with a free end point.
TsResult ts_open(const WreathSpace& w, Vertex start, const VertexSet& must_visit, int cap = kHeldKarpCap);

int lamp_distance(const WreathSpace& w, const LampVertex& u, const LampVertex& v, int cap = kHeldKarpCap);
std::vector<LampVertex> lamp_geodesic(const WreathSpace& w, const LampVertex& u, const LampVertex& v,
                                      int cap = kHeldKarpCap);

// Every vertex of B(v, radius) other than v is strictly closer to u than v is.
bool dead_end_depth(const WreathSpace& w, const LampVertex& u, const LampVertex& v, int radius);

using LampMap = std::function<LampVertex(const LampVertex&)>;

// (c, p) -> (alpha o c o beta^-1, beta(p)).  alpha: lamp vertices of w1 -> w2,
// beta: base vertices of w1 -> w2; both must be bijections.
LampMap transport_bilip(const WreathSpace& w1, const WreathSpace& w2, const std::vector<Vertex>& alpha,
                        const std::vector<Vertex>& beta);

std::vector<Vertex> invert_bijection(const std::vector<Vertex>& f, std::size_t target_size);

}  // namespace lamplighter
