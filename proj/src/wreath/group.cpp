#include <algorithm>
#include <deque>

#include "lamplighter/wreath_group.hpp"

namespace lamplighter {

namespace {

long mod(long x, long m) {
  if (m == 0) return x;
  long r = x % m;
  return r < 0 ? r + m : r;
}

Coord add_coords(const WreathGroup& g, const Coord& a, const Coord& b) {
  Coord out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i] + b[i], g.base_moduli[i]);
  return out;
}

void add_lamp(const WreathGroup& g, std::map<Coord, long>& lamps, const Coord& at, long value) {
  long v = mod((lamps.count(at) ? lamps[at] : 0) + value, g.lamp_modulus);
  if (v == 0)
    lamps.erase(at);
  else
    lamps[at] = v;
}

std::string format_coord(const Coord& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(c[i]);
  }
  return s;
}

}  // namespace

bool WreathGroup::finite() const {
  return lamp_modulus > 0 && std::none_of(base_moduli.begin(), base_moduli.end(), [](int m) { return m == 0; });
}

void check_element(const WreathGroup& g, const WreathElement& x) {
  if (g.lamp_modulus < 0 || g.base_moduli.empty()) throw invalid_argument("malformed wreath group");
  auto check_coord = [&](const Coord& c) {
    if (c.size() != g.base_moduli.size()) throw invalid_argument("element from a different wreath group (rank)");
    for (std::size_t i = 0; i < c.size(); ++i)
      if (g.base_moduli[i] > 0 && (c[i] < 0 || c[i] >= g.base_moduli[i]))
        throw invalid_argument("element from a different wreath group (base residue)");
  };
  check_coord(x.base);
  for (const auto& [at, v] : x.lamps) {
    check_coord(at);
    if (v == 0 || (g.lamp_modulus > 0 && (v < 0 || v >= g.lamp_modulus)))
      throw invalid_argument("element from a different wreath group (lamp value)");
  }
}

WreathElement wreath_identity(const WreathGroup& g) { return WreathElement{{}, Coord(g.base_moduli.size(), 0)}; }

WreathElement wreath_mul(const WreathGroup& g, const WreathElement& x, const WreathElement& y) {
  check_element(g, x);
  check_element(g, y);
  WreathElement out = x;
  for (const auto& [at, v] : y.lamps) add_lamp(g, out.lamps, add_coords(g, x.base, at), v);
  out.base = add_coords(g, x.base, y.base);
  return out;
}

WreathElement wreath_inv(const WreathGroup& g, const WreathElement& x) {
  check_element(g, x);
  Coord back(x.base.size());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = mod(-x.base[i], g.base_moduli[i]);
  WreathElement out{{}, back};
  for (const auto& [at, v] : x.lamps) add_lamp(g, out.lamps, add_coords(g, at, back), -v);
  return out;
}

WreathElement lamp_generator(const WreathGroup& g, long value) {
  WreathElement x = wreath_identity(g);
  add_lamp(g, x.lamps, x.base, value);
  return x;
}

WreathElement shift_generator(const WreathGroup& g, int axis, long step) {
  if (axis < 0 || axis >= g.rank()) throw invalid_argument("shift axis out of range");
  WreathElement x = wreath_identity(g);
  x.base[axis] = mod(step, g.base_moduli[axis]);
  return x;
}

WreathElement wreath_word(const WreathGroup& g, const std::vector<WreathElement>& letters) {
  WreathElement x = wreath_identity(g);
  for (const auto& s : letters) x = wreath_mul(g, x, s);
  return x;
}

std::string format_element(const WreathGroup& g, const WreathElement& x) {
  check_element(g, x);
  std::string s = "{";
  bool first = true;
  for (const auto& [at, v] : x.lamps) {
    if (!first) s += ',';
    first = false;
    s += format_coord(at) + ':' + std::to_string(v);
  }
  return s + "}@" + format_coord(x.base);
}

Graph cayley_graph(const WreathGroup& g, const std::vector<WreathElement>& generators, int radius,
                   std::size_t cap) {
  if (radius < 0 && !g.finite()) throw invalid_argument("infinite group needs a finite radius");
  std::vector<WreathElement> moves;
  for (const auto& s : generators) {
    check_element(g, s);
    moves.push_back(s);
    moves.push_back(wreath_inv(g, s));
  }
  std::map<WreathElement, std::pair<Vertex, int>> seen;
  std::vector<WreathElement> order;
  std::deque<WreathElement> queue;
  Graph graph;
  auto visit = [&](const WreathElement& x, int depth) {
    if (seen.size() >= cap) throw cap_exceeded("Cayley window cap " + std::to_string(cap) + " exceeded");
    Vertex id = graph.add_vertex(format_element(g, x));
    seen.emplace(x, std::pair{id, depth});
    order.push_back(x);
    queue.push_back(x);
  };
  visit(wreath_identity(g), 0);
  while (!queue.empty()) {
    WreathElement x = queue.front();
    queue.pop_front();
    auto [id, depth] = seen.at(x);
    for (const auto& s : moves) {
      WreathElement y = wreath_mul(g, x, s);
      if (y == x) continue;
      auto it = seen.find(y);
      if (it == seen.end()) {
        if (radius >= 0 && depth == radius) continue;
        visit(y, depth + 1);
        it = seen.find(y);
      }
      graph.add_edge(id, it->second.first);
    }
  }
  graph.name = "cayley";
  if (radius >= 0) {
    bool any_rim = false;
    for (const auto& [x, info] : seen)
      if (info.second == radius)
        for (const auto& s : moves)
          if (!seen.count(wreath_mul(g, x, s))) {
            graph.mark_rim(info.first);
            any_rim = true;
            break;
          }
    if (any_rim) graph.set_window("cayley", "radius=" + std::to_string(radius));
  }
  return graph;
}

long word_length(const WreathGroup& g, const std::vector<WreathElement>& generators, const WreathElement& target,
                 std::size_t cap) {
  check_element(g, target);
  std::vector<WreathElement> moves;
  for (const auto& s : generators) {
    moves.push_back(s);
    moves.push_back(wreath_inv(g, s));
  }
  const WreathElement start = wreath_identity(g);
  if (target == start) return 0;
  std::map<WreathElement, long> dist[2];
  std::vector<WreathElement> frontier[2];
  dist[0][start] = 0;
  dist[1][target] = 0;
  frontier[0] = {start};
  frontier[1] = {target};
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    long best = -1;
    std::vector<WreathElement> next;
    for (const auto& x : frontier[side]) {
      const long dx = dist[side][x];
      for (const auto& s : moves) {
        WreathElement y = wreath_mul(g, x, s);
        if (dist[side].count(y)) continue;
        dist[side][y] = dx + 1;
        if (auto it = dist[1 - side].find(y); it != dist[1 - side].end()) {
          long total = dx + 1 + it->second;
          if (best < 0 || total < best) best = total;
        }
        next.push_back(std::move(y));
        if (dist[0].size() + dist[1].size() > cap) return -1;
      }
    }
    if (best >= 0) return best;
    frontier[side] = std::move(next);
  }
  return -1;
}

}  // namespace lamplighter
