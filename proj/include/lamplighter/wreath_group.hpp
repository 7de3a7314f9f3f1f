#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lamplighter/graph_core.hpp"

namespace lamplighter {

// A wr B with A = Z_n (n = 0 means Z) and B a product of cyclic factors
// (modulus 0 means Z).  Right multiplication by the lamp generator changes
// the lamp under the arrow; by a shift generator it moves the arrow.
struct WreathGroup {
  int lamp_modulus = 2;
  std::vector<int> base_moduli{0};

  int rank() const { return static_cast<int>(base_moduli.size()); }
  bool finite() const;
  bool operator==(const WreathGroup&) const = default;
};

using Coord = std::vector<long>;

struct WreathElement {
  std::map<Coord, long> lamps;  // no zero entries
  Coord base;
  auto operator<=>(const WreathElement&) const = default;
};

void check_element(const WreathGroup& g, const WreathElement& x);
WreathElement wreath_identity(const WreathGroup& g);
WreathElement wreath_mul(const WreathGroup& g, const WreathElement& x, const WreathElement& y);
WreathElement wreath_inv(const WreathGroup& g, const WreathElement& x);
// Lamp `value` at the origin, arrow at the origin.
WreathElement lamp_generator(const WreathGroup& g, long value = 1);
WreathElement shift_generator(const WreathGroup& g, int axis = 0, long step = 1);
WreathElement wreath_word(const WreathGroup& g, const std::vector<WreathElement>& letters);
std::string format_element(const WreathGroup& g, const WreathElement& x);

// Undirected Cayley graph on right multiplication.  radius < 0 enumerates a
// finite group completely; otherwise the ball of that radius around the
// identity, with the outer sphere marked as rim.
Graph cayley_graph(const WreathGroup& g, const std::vector<WreathElement>& generators, int radius,
                   std::size_t cap = 200'000);

// Word length by bidirectional BFS; -1 when the state cap is hit first.
long word_length(const WreathGroup& g, const std::vector<WreathElement>& generators, const WreathElement& target,
                 std::size_t cap);

// Vertex of the (n+1)-regular tree: a Z_n word on (-inf, level], no zeros.
struct TreePoint {
  long level = 0;
  std::map<long, int> word;
  auto operator<=>(const TreePoint&) const = default;
};

using DLPoint = std::pair<TreePoint, TreePoint>;

bool tree_adjacent(const TreePoint& a, const TreePoint& b);
// Both coordinates adjacent with levels moving in opposite directions.
bool dl_adjacent(const DLPoint& x, const DLPoint& y);
std::vector<DLPoint> dl_neighbors(int n, const DLPoint& x);
DLPoint dl_root();
std::string format_tree_point(const TreePoint& p);
std::string format_dl_point(const DLPoint& p);

// Ball of the given radius around the root pair in DL(n).
Graph dl_graph(int n, int depth, std::size_t cap = 200'000);

// Splits the colouring at the arrow p: the left word is c on (-inf, p-1] at
// level p-1, the right word reads c on [p, inf) backwards via y -> c(1-y) at
// level 1-p.  Levels always sum to 0.
DLPoint psi_embed(const WreathGroup& g, const WreathElement& x);

}  // namespace lamplighter
