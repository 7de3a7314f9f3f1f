#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>

#include "lamplighter/wreath.hpp"

namespace lamplighter {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int checked_distance(const WreathSpace& w, Vertex a, Vertex b) {
  int d = w.base_distance(a, b);
  if (d == kUnreachable) throw disconnected_error("base vertices in different components");
  return d;
}

// Held-Karp over subsets.  finish[mask*k + i] is the cheapest completion from
// stops[i] once the stops in mask are done; with a fixed end it pays the last
// hop to end, otherwise completion of the full mask costs nothing.
TsResult held_karp(const WreathSpace& w, Vertex start, const VertexSet& must_visit, const Vertex* end, int cap) {
  w.base().check_vertex(start);
  if (end) w.base().check_vertex(*end);
  for (Vertex q : must_visit) w.base().check_vertex(q);
  if (cap > 24) throw invalid_argument("Held-Karp cap above 24 is not supported");
  VertexSet stops = make_set(must_visit);
  if (static_cast<int>(stops.size()) > cap)
    throw cap_exceeded("Held-Karp cap " + std::to_string(cap) + " exceeded (" + std::to_string(stops.size()) +
                       " lamps)");
  const std::size_t k = stops.size();
  TsResult result;
  if (k == 0) {
    result.length = end ? checked_distance(w, start, *end) : 0;
    return result;
  }
  std::vector<int> hop(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) hop[i * k + j] = checked_distance(w, stops[i], stops[j]);
  std::vector<int> to_end(k, 0), from_start(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (end) to_end[i] = checked_distance(w, stops[i], *end);
    from_start[i] = checked_distance(w, start, stops[i]);
  }
  const std::uint32_t full = (1u << k) - 1;
  std::vector<int> finish((static_cast<std::size_t>(full) + 1) * k, kInf);
  for (std::size_t i = 0; i < k; ++i) finish[full * k + i] = to_end[i];
  for (std::uint32_t mask = full; mask-- > 1;) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      int best = kInf;
      for (std::size_t j = 0; j < k; ++j) {
        if (mask >> j & 1u) continue;
        best = std::min(best, hop[i * k + j] + finish[(mask | (1u << j)) * k + j]);
      }
      finish[mask * k + i] = best;
    }
  }
  // Walk forward taking the smallest stop that stays optimal, which yields
  // the lexicographically least optimal order.
  int best = kInf;
  for (std::size_t j = 0; j < k; ++j) best = std::min(best, from_start[j] + finish[(1u << j) * k + j]);
  result.length = best;
  std::uint32_t mask = 0;
  std::size_t cur = 0;
  int remaining = best;
  for (std::size_t step = 0; step < k; ++step) {
    for (std::size_t j = 0; j < k; ++j) {
      if (mask >> j & 1u) continue;
      int hop_cost = step == 0 ? from_start[j] : hop[cur * k + j];
      if (hop_cost + finish[(mask | (1u << j)) * k + j] == remaining) {
        remaining -= hop_cost;
        mask |= 1u << j;
        cur = j;
        result.order.push_back(stops[j]);
        break;
      }
    }
  }
  return result;
}

}  // namespace

TsResult ts_path(const WreathSpace& w, Vertex start, const VertexSet& must_visit, Vertex end, int cap) {
  return held_karp(w, start, must_visit, &end, cap);
}

TsResult ts_open(const WreathSpace& w, Vertex start, const VertexSet& must_visit, int cap) {
  return held_karp(w, start, must_visit, nullptr, cap);
}

int lamp_distance(const WreathSpace& w, const LampVertex& u, const LampVertex& v, int cap) {
  w.validate(u);
  w.validate(v);
  const VertexSet diff = colouring_difference(u.colours, v.colours);
  int total = ts_path(w, u.arrow, diff, v.arrow, cap).length;
  for (Vertex q : diff) total += w.colour_distance(w.colour_at(u.colours, q), w.colour_at(v.colours, q));
  return total;
}

std::vector<LampVertex> lamp_geodesic(const WreathSpace& w, const LampVertex& u, const LampVertex& v, int cap) {
  w.validate(u);
  w.validate(v);
  const VertexSet diff = colouring_difference(u.colours, v.colours);
  const TsResult tour = ts_path(w, u.arrow, diff, v.arrow, cap);
  std::vector<LampVertex> path{u};
  LampVertex cur = u;
  auto walk_to = [&](Vertex target) {
    auto steps = shortest_path(w.base(), cur.arrow, target);
    for (std::size_t i = 1; i < steps.size(); ++i) {
      cur.arrow = steps[i];
      path.push_back(cur);
    }
  };
  for (Vertex q : tour.order) {
    walk_to(q);
    auto recolour = shortest_path(w.lamp(), w.colour_at(cur.colours, q), w.colour_at(v.colours, q));
    for (std::size_t i = 1; i < recolour.size(); ++i) {
      if (recolour[i] == w.basepoint())
        cur.colours.erase(q);
      else
        cur.colours[q] = recolour[i];
      path.push_back(cur);
    }
  }
  walk_to(v.arrow);
  return path;
}

bool dead_end_depth(const WreathSpace& w, const LampVertex& u, const LampVertex& v, int radius) {
  if (radius < 0) throw invalid_argument("negative depth");
  w.validate(u);
  w.validate(v);
  const int rim = rim_distance(w.base(), v.arrow);
  if (rim != kNoRim && rim < radius)
    throw window_error("ball of radius " + std::to_string(radius) + " around v leaves the base window");
  const int reference = lamp_distance(w, u, v);
  std::set<LampVertex> seen{v};
  std::deque<std::pair<LampVertex, int>> queue{{v, 0}};
  while (!queue.empty()) {
    auto [x, d] = queue.front();
    queue.pop_front();
    if (d > 0 && lamp_distance(w, u, x) >= reference) return false;
    if (d == radius) continue;
    for (auto& y : neighbors(w, x))
      if (seen.insert(y).second) queue.emplace_back(std::move(y), d + 1);
  }
  return true;
}

}  // namespace lamplighter
