#include <algorithm>
#include <climits>
#include <deque>
#include <set>

#include "lamplighter/leaves.hpp"

namespace lamplighter {

namespace {

int recolour_cost(const WreathSpace& w, const Colouring& a, const Colouring& b, const VertexSet& diff) {
  int cost = 0;
  for (Vertex q : diff) cost += w.colour_distance(w.colour_at(a, q), w.colour_at(b, q));
  return cost;
}

int min_distance(const WreathSpace& w, const VertexSet& a, const VertexSet& b) {
  int best = INT_MAX;
  for (Vertex x : a)
    for (Vertex y : b) best = std::min(best, w.base_distance(x, y));
  return best;
}

SupportBall smallest_ball(const WreathSpace& w, const VertexSet& s) {
  SupportBall best{-1, INT_MAX};
  for (std::size_t q = 0; q < w.base().vertex_count(); ++q) {
    int r = 0;
    for (Vertex x : s) r = std::max(r, w.base_distance(static_cast<Vertex>(q), x));
    if (r < best.radius) best = {static_cast<Vertex>(q), r};
  }
  return best;
}

}  // namespace

int dist_to_leaf(const WreathSpace& w, const LampVertex& v, const Leaf& leaf, int cap) {
  w.validate(v);
  const Colouring target = w.canonical(leaf);
  const VertexSet diff = colouring_difference(v.colours, target);
  return ts_open(w, v.arrow, diff, cap).length + recolour_cost(w, v.colours, target, diff);
}

int leaf_distance(const WreathSpace& w, const Leaf& a, const Leaf& b, int cap) {
  const Colouring ca = w.canonical(a), cb = w.canonical(b);
  const VertexSet diff = colouring_difference(ca, cb);
  if (diff.empty()) return 0;
  int best = INT_MAX;
  for (Vertex s : diff) best = std::min(best, ts_open(w, s, diff, cap).length);
  return best + recolour_cost(w, ca, cb, diff);
}

VertexSet leaf_region_near(const WreathSpace& w, const Leaf& c, const Leaf& other, int radius) {
  VertexSet out;
  for (std::size_t q = 0; q < w.base().vertex_count(); ++q) {
    if (dist_to_leaf(w, LampVertex{w.canonical(c), static_cast<Vertex>(q)}, other) > radius) continue;
    if (w.base().on_rim(static_cast<Vertex>(q)))
      throw window_error("leaf region reaches the base window rim at " + w.base().label(static_cast<Vertex>(q)));
    out.push_back(static_cast<Vertex>(q));
  }
  return out;
}

LeafIntersection leaf_coarse_intersection(const WreathSpace& w, const Leaf& a, const Leaf& b, int radius) {
  if (radius < 0) throw invalid_argument("negative thickening");
  const Colouring ca = w.canonical(a), cb = w.canonical(b);
  if (ca == cb) throw invalid_argument("leaves must be distinct");
  std::set<LampVertex> members;
  for (std::size_t p = 0; p < w.base().vertex_count(); ++p) {
    std::set<LampVertex> seen{LampVertex{ca, static_cast<Vertex>(p)}};
    std::deque<std::pair<LampVertex, int>> queue{{*seen.begin(), 0}};
    while (!queue.empty()) {
      auto [x, d] = queue.front();
      queue.pop_front();
      if (dist_to_leaf(w, x, cb) <= radius) {
        const int rim = rim_distance(w.base(), x.arrow);
        if (rim != kNoRim && rim <= radius)
          throw window_error("coarse intersection reaches the base window rim near " + w.base().label(x.arrow));
        members.insert(x);
      }
      if (d == radius) continue;
      for (auto& y : neighbors(w, x))
        if (seen.insert(y).second) queue.emplace_back(std::move(y), d + 1);
    }
  }
  LeafIntersection out;
  out.empty = members.empty();
  out.size = members.size();
  std::vector<LampVertex> list(members.begin(), members.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) out.diameter = std::max(out.diameter, lamp_distance(w, list[i], list[j]));
  long long bound = 1 + 4LL * radius;
  for (int k = 0; k < 6 * radius && bound < LLONG_MAX / 64; ++k) bound *= w.base().max_degree();
  out.bound = bound;
  return out;
}

SquareReport detect_square(const WreathSpace& w, const std::array<Leaf, 4>& leaves, int eps, int spread) {
  if (eps < 0) throw invalid_argument("negative eps");
  if (spread <= 3 * eps) throw invalid_argument("square detection needs L > 3 eps");
  const int n = w.modulus();
  if (n < 2) throw invalid_argument("squares of leaves need a lamplighter space");
  std::array<Colouring, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = w.canonical(leaves[i]);

  SquareReport r;
  auto refute = [&](const std::string& why) {
    r.ok = false;
    r.failure = why;
    return r;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (c[i] == c[j]) return refute("distinctness: P" + std::to_string(i) + " = P" + std::to_string(j));

  r.base = c[0];
  r.first = subtract_colourings(n, c[1], c[0]);
  r.second = subtract_colourings(n, c[3], c[0]);
  if (add_colourings(n, add_colourings(n, r.base, r.first), r.second) != c[2])
    return refute("decomposition: P2 differs from X(c + a + b)");

  r.first_ball = smallest_ball(w, support(r.first));
  r.second_ball = smallest_ball(w, support(r.second));
  if (r.first_ball.radius > eps || r.second_ball.radius > eps) return refute("support radius exceeds eps");

  for (int i = 0; i < 4; ++i) {
    r.side[i] = leaf_distance(w, c[i], c[(i + 1) % 4]);
    if (r.side[i] > eps)
      return refute("side: d(P" + std::to_string(i) + ",P" + std::to_string((i + 1) % 4) + ") = " +
                    std::to_string(r.side[i]) + " > eps");
  }
  for (int i = 0; i < 4; ++i) {
    VertexSet before = leaf_region_near(w, c[i], c[(i + 3) % 4], eps);
    VertexSet after = leaf_region_near(w, c[i], c[(i + 1) % 4], eps);
    r.spread[i] = min_distance(w, before, after);
    if (r.spread[i] < spread)
      return refute("spread: inside P" + std::to_string(i) + " the two near regions are " +
                    std::to_string(r.spread[i]) + " apart");
  }
  r.support_gap = std::max(0, w.base_distance(r.first_ball.centre, r.second_ball.centre) - r.first_ball.radius -
                                  r.second_ball.radius);
  if (r.support_gap < spread - 2 * eps) return refute("support balls closer than L - 2 eps");
  r.ok = true;
  return r;
}

LadderReport ladder_check(const WreathSpace& w, const std::vector<Leaf>& p, const std::vector<Leaf>& q, int eps,
                          int spread, int eta, const LampVertex& u, const LampVertex& v) {
  if (p.empty() || p.size() != q.size()) throw invalid_argument("ladder needs two equally long nonempty sequences");
  if (spread <= 3 * eps) throw invalid_argument("ladder check needs L > 3 eps");
  if (dist_to_leaf(w, u, p.front()) > eta || dist_to_leaf(w, u, q.front()) > eta)
    throw invalid_argument("u is not within eta of both first leaves");
  if (dist_to_leaf(w, v, p.back()) > eta || dist_to_leaf(w, v, q.back()) > eta)
    throw invalid_argument("v is not within eta of both last leaves");
  const int n = w.modulus();
  LadderReport r;
  r.bound = 6 * eta;
  r.difference = subtract_colourings(n, w.canonical(q.front()), w.canonical(p.front()));
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    auto square = detect_square(w, {p[i], p[i + 1], q[i + 1], q[i]}, eps, spread);
    if (!square.ok) {
      r.failed_rung = static_cast<int>(i) + 1;
      r.failure = square.failure;
      return r;
    }
    if (subtract_colourings(n, w.canonical(q[i + 1]), w.canonical(p[i + 1])) != r.difference) {
      r.failed_rung = static_cast<int>(i) + 1;
      r.failure = "rung difference changed";
      return r;
    }
  }
  r.arrow_distance = w.base_distance(u.arrow, v.arrow);
  r.ok = r.arrow_distance <= r.bound;
  if (!r.ok) r.failure = "arrow bound violated";
  return r;
}

}  // namespace lamplighter
