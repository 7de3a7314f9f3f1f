#include <random>

#include "doctest.h"
#include "lamplighter/homotopy.hpp"
#include "oracles.hpp"

using namespace lamplighter;

namespace {

PathSeq free_reduce(const PathSeq& p) {
  PathSeq out;
  for (Vertex v : p) {
    if (out.size() >= 2 && out[out.size() - 2] == v)
      out.pop_back();
    else
      out.push_back(v);
  }
  return out;
}

PathSeq random_walk(const Graph& g, Vertex from, std::size_t steps, std::mt19937_64& rng) {
  PathSeq p{from};
  for (std::size_t k = 0; k < steps; ++k) {
    const auto& nb = g.neighbors(p.back());
    p.push_back(nb[rng() % nb.size()]);
  }
  return p;
}

PathSeq geodesic_path(const LampWindow& win, const WreathSpace& w, const LampVertex& u, const LampVertex& v) {
  PathSeq p;
  for (const auto& x : lamp_geodesic(w, u, v)) p.push_back(win.id(x));
  return p;
}

}  // namespace

TEST_CASE("elementary moves") {
  Graph p3 = path_graph(3);
  CHECK(elementary_move(p3, {0, 1, 0}, 0, 2, {0}, 1) == PathSeq{0});
  CHECK(elementary_move(p3, {0, 1, 2}, 0, 2, {0, 1, 2}, 1) == PathSeq{0, 1, 2});

  Graph c8 = cycle_graph(8);
  try {
    elementary_move(c8, {0, 1, 2}, 0, 2, {0, 7, 6, 5, 4, 3, 2}, 3);
    FAIL("expected a diameter violation");
  } catch (const move_error& e) {
    auto [a, b] = e.offending;
    CHECK(distances_from(c8, a)[b] == 4);
  }
  CHECK_THROWS_AS(elementary_move(c8, {0, 1, 2}, 0, 2, {0, 1}, 3), move_error);
  CHECK_THROWS_AS(elementary_move(c8, {0, 1, 2}, 0, 3, {0}, 3), move_error);
  CHECK_THROWS_AS(elementary_move(c8, {0, 2}, 0, 1, {0, 2}, 3), invalid_argument);
}

TEST_CASE("coarse homotopy search") {
  Graph c4 = cycle_graph(4);
  CHECK(coarse_homotopic(c4, {0, 1, 2}, {0, 1, 2}, 2).verdict == Verdict::yes);
  auto r = coarse_homotopic(c4, {0, 1, 2}, {0, 3, 2}, 2);
  REQUIRE(r.verdict == Verdict::yes);
  CHECK(r.script.size() == 1);
  CHECK(replay(c4, {0, 1, 2}, r.script, 2) == PathSeq{0, 3, 2});
  CHECK(coarse_homotopic(c4, {0, 1, 2}, {0, 3, 2}, 1, {4, 100000}).verdict == Verdict::no);

  Graph c8 = cycle_graph(8);
  auto no = coarse_homotopic(c8, {0, 1}, {0, 7, 6, 5, 4, 3, 2, 1}, 1, {9, 100000});
  CHECK(no.verdict == Verdict::no);
  auto capped = coarse_homotopic(c8, {0, 1}, {0, 7, 6, 5, 4, 3, 2, 1}, 1, {9, 3});
  CHECK(capped.verdict == Verdict::unknown);
  CHECK_THROWS_AS(coarse_homotopic(c8, {0, 1}, {0, 7}, 1), invalid_argument);
}

TEST_CASE("coarse triviality of loops") {
  Graph c8 = cycle_graph(8);
  CHECK(is_coarsely_trivial(c8, {3}, 0).verdict == Verdict::yes);
  CHECK(is_coarsely_trivial(c8, {0, 1, 2, 3, 4, 5, 6, 7, 0}, 2, {10, 200000}).verdict == Verdict::no);
  auto big = is_coarsely_trivial(c8, {0, 1, 2, 3, 4, 5, 6, 7, 0}, 4, {10, 200000});
  CHECK(big.verdict == Verdict::yes);

  Graph grid = grid_window(2, 0, 3);
  auto id = [&](const char* s) { return grid.find(s); };
  PathSeq square{id("1,1"), id("2,1"), id("2,2"), id("1,2"), id("1,1")};
  auto r = is_coarsely_trivial(grid, square, 2);
  REQUIRE(r.verdict == Verdict::yes);
  CHECK(replay(grid, square, r.script, 2) == PathSeq{id("1,1")});
  CHECK_THROWS_AS(is_coarsely_trivial(grid, {id("1,1"), id("2,1")}, 2), invalid_argument);
}

TEST_CASE("scale one on a triangle-free graph is free reduction") {
  std::mt19937_64 rng(41);
  for (const Graph& g : {cycle_graph(6), grid_window(2, 0, 2), tree_window(3, 2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Vertex from = static_cast<Vertex>(rng() % g.vertex_count());
      PathSeq p1 = random_walk(g, from, rng() % 6, rng);
      PathSeq p2 = random_walk(g, from, rng() % 6, rng);
      // Force a shared end point by appending a geodesic.
      for (Vertex v : shortest_path(g, p2.back(), p1.back())) {
        if (v != p2.back()) p2.push_back(v);
      }
      std::size_t len = std::max(p1.size(), p2.size()) - 1;
      auto r = coarse_homotopic(g, p1, p2, 1, {len, 200000});
      REQUIRE(r.verdict != Verdict::unknown);
      CHECK((r.verdict == Verdict::yes) == (free_reduce(p1) == free_reduce(p2)));
      if (r.verdict == Verdict::yes) CHECK(replay(g, p1, r.script, 1) == p2);
    }
  }
}

TEST_CASE("scripts replay at every larger scale") {
  Graph grid = grid_window(2, 0, 3);
  auto id = [&](const char* s) { return grid.find(s); };
  PathSeq a{id("0,0"), id("1,0"), id("2,0"), id("2,1")}, b{id("0,0"), id("0,1"), id("1,1"), id("2,1")};
  auto r = coarse_homotopic(grid, a, b, 2, {6, 100000});
  REQUIRE(r.verdict == Verdict::yes);
  for (int scale = 2; scale <= 5; ++scale) CHECK(replay(grid, a, r.script, scale) == b);
}

TEST_CASE("enumerated moves are valid") {
  Graph grid = grid_window(2, 0, 3);
  DistanceMatrix dm(grid);
  PathSeq p{0, 1, 2, 6};
  for (int scale : {1, 2}) {
    auto moves = enumerate_moves(grid, dm, p, scale, 5);
    CHECK_FALSE(moves.empty());
    for (const auto& m : moves) {
      auto q = elementary_move(grid, p, m.i, m.j, m.replacement, scale);
      CHECK(q.size() - 1 <= 5);
      CHECK(q != p);
    }
  }
}

TEST_CASE("explicit coverings and nerve projection") {
  Graph g = path_graph(5);
  g.add_vertex("5");
  g.add_vertex("6");
  g.add_edge(2, 5);
  g.add_edge(5, 6);
  auto cov = explicit_covering({{"A", {0, 1, 2, 5}}, {"B", {2, 3, 4}}, {"C", {5, 6}}}, 1);
  auto report = verify_covering(g, cov);
  CHECK(report.ok);
  CHECK(report.part_count == 3);
  CHECK(report.nerve_edges == 2);

  auto plain = nerve_projection(g, cov, {0, 1, 2, 3, 4}, "A", "B");
  CHECK(plain.reduced == std::vector<std::string>{"A", "B"});
  auto detour = nerve_projection(g, cov, {0, 1, 2, 5, 6, 5, 2, 3, 4}, "A", "B");
  CHECK(detour.raw.size() > plain.raw.size());
  CHECK(detour.reduced == plain.reduced);
  CHECK_THROWS_AS(nerve_projection(g, cov, {0, 1}, "A", "A"), invalid_argument);

  Graph p3 = path_graph(3);
  auto bad = explicit_covering({{"X", {0, 1}}, {"Y", {1, 2}}, {"Z", {1, 2}}}, 1);
  CHECK_FALSE(verify_covering(p3, bad).ok);
  CHECK_THROWS_AS(nerve_projection(p3, bad, {0, 1, 2}, "X", "Y"), covering_error);

  auto gap = explicit_covering({{"X", {0, 1}}, {"Y", {2}}}, 1);
  CHECK_FALSE(verify_covering(p3, gap).ok);
}

TEST_CASE("inner/outer covering of a lamplighter window") {
  auto w = WreathSpace::lamplighter(2, path_graph(7));
  auto win = materialize_full(w);
  auto cov = lamp_io_covering(w, win, 3, 1);
  auto report = verify_covering(win.graph, cov);
  CHECK(report.ok);
  CHECK(report.part_count == 1 + 8);

  CHECK(io_parts(w, 3, 1, LampVertex{{}, 1}) == std::vector<std::string>{"I{}", "O{}"});
  CHECK(io_parts(w, 3, 1, LampVertex{{}, 3}) == std::vector<std::string>{"I{}"});
  CHECK(io_parts(w, 3, 1, LampVertex{{{3, 1}}, 0}) == std::vector<std::string>{"O{3:1}"});

  // Each vertex lies in at most one inner and one outer part.
  for (std::size_t v = 0; v < win.points.size(); ++v) {
    auto keys = cov.parts(static_cast<Vertex>(v));
    CHECK(keys.size() <= 2);
    if (keys.size() == 2) CHECK(keys[0][0] != keys[1][0]);
  }

  auto line = WreathSpace::lamplighter(2, line_window(-2, 2));
  auto small = materialize_full(line);
  CHECK_THROWS_AS(lamp_io_covering(line, small, line.base().find("0"), 1), window_error);
}

TEST_CASE("nerve projection across the inner part") {
  auto w = WreathSpace::lamplighter(2, path_graph(7));
  auto win = materialize_full(w);
  auto cov = lamp_io_covering(w, win, 3, 1);
  LampVertex u{{}, 0}, v{{{3, 1}}, 0};
  PathSeq geo = geodesic_path(win, w, u, v);
  auto proj = nerve_projection(win.graph, cov, geo, "O{}", "O{3:1}");
  CHECK(proj.reduced == std::vector<std::string>{"O{}", "I{}", "O{3:1}"});

  // Reduced nerve paths are stable under single moves.
  std::mt19937_64 rng(43);
  DistanceMatrix dm(win.graph);
  for (int trial = 0; trial < 50; ++trial) {
    PathSeq p = geo;
    for (int k = 0; k < 3; ++k) {
      auto moves = enumerate_moves(win.graph, dm, p, 1, geo.size() + 3);
      const auto& m = moves[rng() % moves.size()];
      p = elementary_move(win.graph, p, m.i, m.j, m.replacement, 1);
    }
    auto moves = enumerate_moves(win.graph, dm, p, 1, geo.size() + 5);
    const auto& m = moves[rng() % moves.size()];
    PathSeq q = elementary_move(win.graph, p, m.i, m.j, m.replacement, 1);
    CHECK(nerve_projection(win.graph, cov, p, "O{}", "O{3:1}").reduced ==
          nerve_projection(win.graph, cov, q, "O{}", "O{3:1}").reduced);
  }
}

TEST_CASE("persistent intersections") {
  Graph p3 = path_graph(3);
  auto trivial = persistent_intersection(p3, {1}, {1}, 1);
  CHECK(trivial.verdict == Persistence::certified);

  auto w = WreathSpace::lamplighter(2, path_graph(7));
  auto win = materialize_full(w);
  auto cov = lamp_io_covering(w, win, 3, 1);
  VertexSet inner = part_members(win.graph, cov, "I{}");
  SearchCaps caps{0, 200000};
  for (const auto& [u, v] : std::vector<std::pair<LampVertex, LampVertex>>{{{{}, 0}, {{{3, 1}}, 0}},
                                                                            {{{{0, 1}}, 6}, {{{3, 1}, {4, 1}}, 6}}}) {
    PathSeq geo = geodesic_path(win, w, u, v);
    caps.max_len = geo.size() + 1;
    auto cert = persistent_intersection(win.graph, geo, inner, 1, caps, &cov);
    CHECK(cert.verdict == Persistence::certified);
    CHECK(cert.nerve_path.size() == 3);
    auto search = find_avoiding_path(win.graph, geo, inner, 1, caps);
    CHECK_FALSE(search.found);
    CHECK(search.closed);
  }

  Graph grid = grid_window(2, 0, 4);
  auto id = [&](const char* s) { return grid.find(s); };
  PathSeq straight{id("0,0"), id("1,0"), id("2,0")};
  auto one = persistent_intersection(grid, straight, {id("1,0")}, 3, {6, 100000});
  REQUIRE(one.verdict == Persistence::refuted);
  CHECK(one.script.size() == 1);
  CHECK(replay(grid, straight, one.script, 3) == one.witness);
  CHECK_FALSE(contains(make_set(one.witness), id("1,0")));

  auto two = persistent_intersection(grid, straight, {id("1,0")}, 2, {6, 100000});
  REQUIRE(two.verdict == Persistence::refuted);
  CHECK(two.script.size() == 2);
  CHECK(replay(grid, straight, two.script, 2) == two.witness);

  auto bad = explicit_covering({{"X", {0, 1}}, {"Y", {1, 2}}, {"Z", {1, 2}}}, 1);
  auto downgraded = persistent_intersection(p3, {0, 1, 2}, {1}, 1, {4, 1000}, &bad);
  CHECK(downgraded.note.find("search only") != std::string::npos);
}

TEST_CASE("stringy witness") {
  auto line = WreathSpace::lamplighter(2, line_window(-30, 30));
  auto id = [&](const char* s) { return line.base().find(s); };
  LampVertex u{{}, id("0")}, v{{{id("10"), 1}}, id("20")};
  auto sw = stringy_witness(line, u, v, 1, 3);
  CHECK(sw.centre == id("10"));
  CHECK(sw.bound == 20);
  CHECK(sw.diameter == 19);
  CHECK(sw.diameter <= sw.bound);
  CHECK(sw.gap_from_u >= 3);
  CHECK(sw.part == "I{}");

  // Exhaustive diameter of the inner part.
  std::vector<LampVertex> part;
  for (int mask = 0; mask < (1 << 7); ++mask)
    for (int q = 8; q <= 12; ++q) {
      LampVertex x{{}, id(std::to_string(q).c_str())};
      for (int b = 0; b < 7; ++b)
        if (mask >> b & 1) x.colours[id(std::to_string(7 + b).c_str())] = 1;
      part.push_back(x);
    }
  int diameter = 0;
  for (const auto& a : part)
    for (const auto& b : part) diameter = std::max(diameter, lamp_distance(line, a, b));
  CHECK(diameter == sw.diameter);

  CHECK_THROWS_AS(stringy_witness(line, u, LampVertex{{}, id("20")}, 1, 3), invalid_argument);
  CHECK_THROWS_AS(stringy_witness(line, u, LampVertex{{{id("2"), 1}}, id("20")}, 1, 3), invalid_argument);
}
