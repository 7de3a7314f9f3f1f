#include <random>

#include "doctest.h"
#include "lamplighter/leaves.hpp"
#include "oracles.hpp"

using namespace lamplighter;

namespace {

Colouring lamps(const WreathSpace& w, std::initializer_list<int> at) {
  Colouring c;
  for (int x : at) c[w.base().find(std::to_string(x))] = 1;
  return c;
}

// BFS distance from v to every vertex of a leaf inside a materialized window.
int bfs_to_leaf(const LampWindow& win, const LampVertex& v, const Colouring& leaf) {
  VertexSet sources;
  for (std::size_t i = 0; i < win.points.size(); ++i)
    if (win.points[i].colours == leaf) sources.push_back(static_cast<Vertex>(i));
  return distances_from_set(win.graph, make_set(sources))[win.id(v)];
}

std::vector<Colouring> all_colourings(const WreathSpace& w) {
  std::vector<Colouring> out;
  for (const auto& v : materialize_full(w).points)
    if (v.arrow == 0) out.push_back(v.colours);
  return out;
}

}  // namespace

TEST_CASE("distance to a leaf") {
  auto line = WreathSpace::lamplighter(2, line_window(-4, 4));
  LampVertex origin{{}, line.base().find("0")};
  CHECK(dist_to_leaf(line, origin, {}) == 0);
  CHECK(dist_to_leaf(line, origin, lamps(line, {3})) == 4);
  CHECK(dist_to_leaf(line, origin, lamps(line, {-1, 2})) == 6);

  auto win = materialize_full(line);
  CHECK(bfs_to_leaf(win, origin, lamps(line, {3})) == 4);
  CHECK(bfs_to_leaf(win, origin, lamps(line, {-1, 2})) == 6);
}

TEST_CASE("distance to a leaf equals BFS on full windows") {
  for (auto w : {WreathSpace::lamplighter(2, path_graph(4)), WreathSpace::lamplighter(3, cycle_graph(3))}) {
    auto win = materialize_full(w);
    for (const auto& leaf : all_colourings(w)) {
      VertexSet sources;
      for (std::size_t i = 0; i < win.points.size(); ++i)
        if (win.points[i].colours == leaf) sources.push_back(static_cast<Vertex>(i));
      CHECK(sources.size() == w.base().vertex_count());
      auto d = distances_from_set(win.graph, make_set(sources));
      int closest = 1 << 30;
      for (std::size_t i = 0; i < win.points.size(); ++i) {
        CHECK(dist_to_leaf(w, win.points[i], leaf) == d[i]);
        if (win.points[i].arrow == 0) closest = std::min(closest, d[i]);
      }
      // Leaf-to-leaf distance: minimum over all vertices of the other leaf.
      for (const auto& other : all_colourings(w)) {
        int best = 1 << 30;
        for (std::size_t i = 0; i < win.points.size(); ++i)
          if (win.points[i].colours == other) best = std::min(best, d[i]);
        CHECK(leaf_distance(w, other, leaf) == best);
      }
    }
  }
}

TEST_CASE("leaves partition the window") {
  auto w = WreathSpace::lamplighter(2, path_graph(3));
  auto win = materialize_full(w);
  std::map<Colouring, int> count;
  for (const auto& v : win.points) ++count[v.colours];
  CHECK(count.size() == 8);
  for (const auto& [c, k] : count) CHECK(k == 3);
}

TEST_CASE("coarse intersection of two leaves") {
  auto line = WreathSpace::lamplighter(2, line_window(-15, 15));
  CHECK_THROWS_AS(leaf_coarse_intersection(line, {}, {}, 2), invalid_argument);
  CHECK(leaf_coarse_intersection(line, {}, lamps(line, {0}), 0).empty);

  auto r = leaf_coarse_intersection(line, {}, lamps(line, {0}), 2);
  CHECK_FALSE(r.empty);
  CHECK(r.bound == 9LL * 4096);
  CHECK(r.diameter <= r.bound);

  // Same set by BFS inside a materialized window around the origin.
  auto small = WreathSpace::lamplighter(2, line_window(-6, 6));
  VertexSet core = ball(small.base(), small.base().find("0"), 4);
  auto win = materialize(small, core, core);
  auto leaf_set = [&](const Colouring& c) {
    VertexSet s;
    for (std::size_t i = 0; i < win.points.size(); ++i)
      if (win.points[i].colours == c) s.push_back(static_cast<Vertex>(i));
    return make_set(s);
  };
  auto da = distances_from_set(win.graph, leaf_set({}));
  auto db = distances_from_set(win.graph, leaf_set(lamps(small, {0})));
  std::vector<LampVertex> members;
  for (std::size_t i = 0; i < win.points.size(); ++i)
    if (da[i] != kUnreachable && db[i] != kUnreachable && da[i] <= 2 && db[i] <= 2) members.push_back(win.points[i]);
  CHECK(members.size() == r.size);
  int diameter = 0;
  for (const auto& a : members)
    for (const auto& b : members) diameter = std::max(diameter, lamp_distance(small, a, b));
  CHECK(diameter == r.diameter);

  auto tight = WreathSpace::lamplighter(2, line_window(-2, 2));
  CHECK_THROWS_AS(leaf_coarse_intersection(tight, {}, lamps(tight, {0}), 2), window_error);
}

TEST_CASE("squares of leaves") {
  auto line = WreathSpace::lamplighter(2, line_window(-20, 20));
  Colouring a = lamps(line, {-6}), b = lamps(line, {6}), ab = lamps(line, {-6, 6});
  auto sq = detect_square(line, {Colouring{}, a, ab, b}, 1, 4);
  REQUIRE(sq.ok);
  CHECK(sq.base.empty());
  CHECK(sq.first == a);
  CHECK(sq.second == b);
  CHECK(sq.spread[0] == 12);
  CHECK(sq.support_gap == 12);

  // Wider increments need a larger eps.
  Colouring wide = lamps(line, {-7, -6});
  auto wide_sq = detect_square(line, {Colouring{}, wide, add_colourings(2, wide, b), b}, 3, 10);
  INFO(wide_sq.failure);
  CHECK(wide_sq.ok);
  CHECK(wide_sq.first_ball.radius == 1);

  auto bad = detect_square(line, {Colouring{}, a, lamps(line, {-6, 7}), b}, 1, 4);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failure.rfind("decomposition", 0) == 0);

  auto same = detect_square(line, {a, a, a, a}, 0, 1);
  CHECK(same.failure.rfind("distinctness", 0) == 0);
  CHECK_THROWS_AS(detect_square(line, {Colouring{}, a, ab, b}, 1, 3), invalid_argument);

  auto close = detect_square(line, {Colouring{}, lamps(line, {0}), lamps(line, {0, 2}), lamps(line, {2})}, 1, 4);
  CHECK(close.failure.rfind("spread", 0) == 0);
}

TEST_CASE("square decomposition is unique on a tiny window") {
  auto w = WreathSpace::lamplighter(2, path_graph(6));
  Colouring a{{0, 1}}, b{{5, 1}}, c{{2, 1}};
  std::array<Leaf, 4> leaves{c, add_colourings(2, c, a), add_colourings(2, add_colourings(2, c, a), b),
                             add_colourings(2, c, b)};
  auto sq = detect_square(w, leaves, 1, 4);
  INFO(sq.failure);
  REQUIRE(sq.ok);
  int solutions = 0;
  auto colourings = all_colourings(w);
  for (const auto& base : colourings)
    for (const auto& x : colourings)
      for (const auto& y : colourings)
        if (base == leaves[0] && add_colourings(2, base, x) == leaves[1] && add_colourings(2, base, y) == leaves[3] &&
            add_colourings(2, add_colourings(2, base, x), y) == leaves[2]) {
          ++solutions;
          CHECK(x == sq.first);
          CHECK(y == sq.second);
        }
  CHECK(solutions == 1);
}

TEST_CASE("ladders of leaves") {
  auto line = WreathSpace::lamplighter(2, line_window(-5, 25));
  const Vertex zero = line.base().find("0");
  Colouring delta = lamps(line, {0});
  std::vector<Leaf> p{Colouring{}}, q;
  for (int i = 1; i < 3; ++i) p.push_back(add_colourings(2, p.back(), lamps(line, {5 * i})));
  for (const auto& x : p) q.push_back(add_colourings(2, x, delta));
  LampVertex u{{}, zero}, v{p.back(), zero};
  auto r = ladder_check(line, p, q, 1, 4, 1, u, v);
  CHECK(r.ok);
  CHECK(r.difference == delta);
  CHECK(r.arrow_distance <= r.bound);

  auto single = ladder_check(line, {p[0]}, {q[0]}, 1, 4, 1, u, u);
  CHECK(single.ok);
  CHECK(single.arrow_distance == 0);

  std::vector<Leaf> q_bad = q;
  q_bad[2] = add_colourings(2, p[2], lamps(line, {1}));
  LampVertex v_bad{p[2], line.base().find("1")};
  auto broken = ladder_check(line, p, q_bad, 1, 4, 1, u, v_bad);
  CHECK_FALSE(broken.ok);
  CHECK(broken.failed_rung == 2);

  CHECK_THROWS_AS(ladder_check(line, p, q, 1, 4, 1, LampVertex{{}, line.base().find("3")}, v), invalid_argument);
}

TEST_CASE("aptolic maps") {
  auto line = WreathSpace::lamplighter(2, line_window(-6, 6));
  auto id = aptolic_identity(line);
  std::mt19937_64 rng(53);
  auto random_vertex = [&](const WreathSpace& w) {
    LampVertex v;
    v.arrow = static_cast<Vertex>(rng() % w.base().vertex_count());
    for (int k = 0; k < 4; ++k) {
      int colour = static_cast<int>(rng() % w.lamp_size());
      if (colour) v.colours[static_cast<Vertex>(rng() % w.base().vertex_count())] = colour;
    }
    return v;
  };
  std::vector<std::pair<LampVertex, LampVertex>> sample;
  for (int k = 0; k < 100; ++k) sample.emplace_back(random_vertex(line), random_vertex(line));
  auto fit = aptolic_qi_fit(id, sample);
  CHECK(fit.a == 1);
  CHECK(fit.b == 0);

  std::vector<Vertex> reflect(line.base().vertex_count());
  for (int x = -6; x <= 6; ++x) reflect[line.base().find(std::to_string(x))] = line.base().find(std::to_string(-x));
  auto mirror = aptolic_transport(line, line, {1, 0}, reflect);
  auto mirror_fit = aptolic_qi_fit(mirror, sample);
  CHECK(mirror_fit.a == 1);
  CHECK(mirror_fit.b == 0);
  CHECK(mirror_fit.max_ratio == 1.0);

  // Composition agrees pointwise with sequential application.
  auto small = WreathSpace::lamplighter(2, path_graph(3));
  auto swap = aptolic_transport(small, small, {1, 0}, {2, 1, 0});
  auto turn = aptolic_transport(small, small, {0, 1}, {2, 1, 0});
  auto both = aptolic_compose(swap, turn);
  for (const auto& v : materialize_full(small).points)
    CHECK(aptolic_apply(both, v) == aptolic_apply(turn, aptolic_apply(swap, v)));
  CHECK(alpha_injective(both));
  CHECK(tabulate_alpha(both).size() == 8);

  AptolicMap partial = id;
  partial.alpha_domain = {line.base().find("0")};
  CHECK_THROWS_AS(aptolic_apply(partial, LampVertex{lamps(line, {1}), 0}), invalid_argument);
}

TEST_CASE("affine fits") {
  CHECK(fit_affine({{1, 1}, {2, 2}, {5, 5}}).a == 1);
  std::vector<std::pair<int, int>> halves;
  for (int x = -10; x <= 10; ++x)
    for (int y = -10; y <= 10; ++y) {
      auto floor_half = [](int k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); };
      halves.emplace_back(std::abs(x - y), std::abs(floor_half(x) - floor_half(y)));
    }
  auto fit = fit_affine(halves);
  CHECK(fit.a == 2);
  CHECK(fit.b == doctest::Approx(0.5));
}

TEST_CASE("inclusion of alpha images") {
  auto line = WreathSpace::lamplighter(2, line_window(-6, 6));
  auto id = aptolic_identity(line);
  auto empty = alpha_inclusion_test(id, lamps(line, {2}), {}, 0);
  CHECK(empty.holds);
  CHECK(empty.checked == 1);
  VertexSet s = make_set({line.base().find("-1"), line.base().find("0"), line.base().find("3")});
  auto r = alpha_inclusion_test(id, lamps(line, {2}), s, 0);
  CHECK(r.holds);
  CHECK(r.exhaustive);
  CHECK(r.checked == 8);

  auto ring = WreathSpace::lamplighter(2, cycle_graph(12));
  std::vector<Vertex> shift(12);
  for (int i = 0; i < 12; ++i) shift[i] = (i + 1) % 12;
  auto moved = aptolic_transport(ring, ring, {0, 1}, shift);
  auto shifted = alpha_inclusion_test(moved, Colouring{{7, 1}}, {2, 3, 4}, 1);
  CHECK(shifted.holds);
  CHECK(shifted.checked == 8);

  // A map that rewrites a far lamp violates the inclusion.
  AptolicMap rogue = id;
  const Vertex far = line.base().find("6");
  rogue.alpha = [far](const Colouring& c) {
    Colouring out = c;
    if (!c.empty()) out[far] = 1;
    return out;
  };
  auto caught = alpha_inclusion_test(rogue, {}, {line.base().find("0")}, 1);
  CHECK_FALSE(caught.holds);
  CHECK_FALSE(caught.counterexample.empty());
}

TEST_CASE("divisibility") {
  auto four = WreathSpace::lamplighter(4, line_window(-10, 10));
  auto two = WreathSpace::lamplighter(2, line_window(-10, 10));
  std::vector<Vertex> beta(21);
  for (int i = 0; i < 21; ++i) beta[i] = i;
  AptolicMap m{&four, &two, {}, {}, beta, "beta only"};
  VertexSet s = make_set({four.base().find("-1"), four.base().find("0"), four.base().find("1")});
  auto wide = divisibility_test(m, s, 2);
  CHECK(wide.source_exponent == 3);
  CHECK(wide.target_exponent == 7);
  CHECK(wide.divides);
  CHECK_FALSE(divisibility_test(m, s, 0).divides);

  auto self = divisibility_test(aptolic_identity(four), s, 0);
  CHECK(self.divides);
  CHECK(self.source_exponent == self.target_exponent);

  AptolicMap six_to_two{&four, &two, {}, {}, beta, ""};
  auto nine = WreathSpace::lamplighter(3, line_window(-10, 10));
  six_to_two.source = &nine;
  CHECK_FALSE(divisibility_test(six_to_two, s, 5).divides);
  CHECK_THROWS_AS(divisibility_test(m, {four.base().find("9")}, 3), window_error);
}
