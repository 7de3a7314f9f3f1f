#include <random>
#include <sstream>

#include "doctest.h"
#include "lamplighter/graph_core.hpp"
#include "oracles.hpp"

using namespace lamplighter;

TEST_CASE("distances on small named graphs") {
  Graph p3 = path_graph(3);
  auto d = distances_from(p3, 0);
  CHECK(d == std::vector<int>{0, 1, 2});

  Graph c8 = cycle_graph(8);
  CHECK(distances_from(c8, 0)[4] == 4);
  CHECK(oracle::all_paths_distances(c8, 0)[4] == 4);

  Graph k4 = complete_graph(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v) CHECK(distances_from(k4, u)[v] == (u == v ? 0 : 1));

  CHECK_THROWS_AS(distances_from(p3, 7), unknown_vertex);
}

TEST_CASE("unreachable vertices are flagged") {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge(0, 1);
  auto d = distances_from(g, 0);
  CHECK(d[2] == kUnreachable);
  CHECK_FALSE(is_connected(g));
  CHECK_THROWS_AS(require_connected(g, "x"), disconnected_error);
}

TEST_CASE("BFS agrees with exhaustive path enumeration on graphs up to 8 vertices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(n, 0.35, rng);
    for (Vertex s = 0; s < n; ++s) CHECK(distances_from(g, s) == oracle::all_paths_distances(g, s));
  }
}

TEST_CASE("graph invariants: no loops, no multi-edges, symmetric") {
  Graph g = path_graph(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), invalid_argument);
  CHECK_FALSE(g.add_edge(0, 1));
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_THROWS_AS(g.add_vertex("0"), invalid_argument);
}

TEST_CASE("balls, boundaries and thickenings") {
  Graph grid = grid_window(2, 0, 10);
  VertexSet box;
  for (int x = 4; x <= 6; ++x)
    for (int y = 4; y <= 6; ++y) box.push_back(grid.find(std::to_string(x) + "," + std::to_string(y)));
  box = make_set(box);
  CHECK(boundary(grid, box).size() == 12);

  CHECK(boundary(grid, all_vertices(grid)).empty());

  Graph p5 = path_graph(5);
  CHECK(thicken(p5, {2}, 1) == VertexSet{1, 2, 3});
  CHECK(ball(p5, 0, 2) == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(ball(p5, 9, 1), unknown_vertex);
}

TEST_CASE("boundary and thickening properties on random sets") {
  std::mt19937_64 rng(5);
  Graph g = grid_window(2, -6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vertex> raw;
    int k = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < k; ++i) raw.push_back(static_cast<Vertex>(rng() % g.vertex_count()));
    VertexSet s = make_set(raw);
    VertexSet b = boundary(g, s);
    CHECK(set_intersection(b, s).empty());
    for (Vertex v : b) {
      bool touches = false;
      for (Vertex w : g.neighbors(v)) touches = touches || contains(s, w);
      CHECK(touches);
    }
    int r = static_cast<int>(rng() % 3), t = static_cast<int>(rng() % 3);
    CHECK(thicken(g, s, r + t) == thicken(g, thicken(g, s, r), t));
  }
}

TEST_CASE("thickening excess is controlled by the boundary on boxes") {
  Graph g = grid_window(2, -20, 20);
  for (int radius = 1; radius <= 3; ++radius) {
    double previous = 1e18;
    for (int side = 2; side <= 10; ++side) {
      VertexSet box;
      for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y) box.push_back(g.find(std::to_string(x) + "," + std::to_string(y)));
      box = make_set(box);
      double excess = static_cast<double>(set_difference(thicken(g, box, radius), box).size());
      double ratio = excess / static_cast<double>(boundary(g, box).size());
      CHECK(ratio <= previous + 1e-12);
      previous = ratio;
    }
  }
}

TEST_CASE("ends profile") {
  Graph line = line_window(-20, 20);
  auto rows = ends_profile(line, line.find("0"), {2}, 5);
  CHECK(rows[0].deep_components == 2);
  CHECK(rows[0].components == 2);

  Graph plane = grid_window(2, -20, 20);
  rows = ends_profile(plane, plane.find("0,0"), {3}, 8);
  CHECK(rows[0].deep_components == 1);

  Graph short_line = line_window(-5, 5);
  CHECK_THROWS_AS(ends_profile(short_line, short_line.find("0"), {2}, 5), window_error);
  rows = ends_profile(short_line, short_line.find("0"), {2}, 5, false);
  CHECK_FALSE(rows[0].window_ok);
}

TEST_CASE("growth") {
  CHECK(growth(line_window(-10, 10), 3) == 7);
  CHECK(growth(tree_window(3, 4), 2) == 10);
  CHECK(growth(cycle_graph(9), 0) == 1);
  CHECK_THROWS_AS(growth(line_window(-2, 2), 5), window_error);
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(3);
  Graph c8 = cycle_graph(8);
  std::vector<int> perm{0, 1, 2, 3, 4, 5, 6, 7};
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph relabeled;
  for (int i = 0; i < 8; ++i) relabeled.add_vertex("x" + std::to_string(i));
  for (int i = 0; i < 8; ++i) relabeled.add_edge(perm[i], perm[(i + 1) % 8]);
  auto yes = isomorphic(c8, relabeled);
  CHECK(yes.isomorphic);
  CHECK(is_isomorphism(c8, relabeled, yes.mapping));

  auto no = isomorphic(c8, path_graph(8));
  CHECK_FALSE(no.isomorphic);
  CHECK_FALSE(no.refutation.empty());

  // Same degree sequence, different graphs.
  Graph two_triangles;
  for (int i = 0; i < 6; ++i) two_triangles.add_vertex(std::to_string(i));
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i) two_triangles.add_edge(base + i, base + (i + 1) % 3);
  CHECK_FALSE(isomorphic(cycle_graph(6), two_triangles).isomorphic);

  CHECK(isomorphic(oracle::truncated_cube(), oracle::truncated_cube()).isomorphic);
  CHECK_THROWS_AS(isomorphic(cycle_graph(300), cycle_graph(300)), cap_exceeded);
}

TEST_CASE("edge list round trip and DOT export") {
  Graph g = tree_window(3, 2);
  g.add_vertex("lonely");
  std::stringstream ss;
  write_edge_list(ss, g);
  Graph back = read_edge_list(ss);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edge_count() == g.edge_count());
  CHECK(back.is_window());
  CHECK(back.on_rim(back.find("r00")));
  CHECK(isomorphic(g, back).isomorphic);

  std::stringstream dot;
  write_dot(dot, path_graph(2));
  CHECK(dot.str().find("\"0\" -- \"1\"") != std::string::npos);
}

TEST_CASE("family builder") {
  CHECK(build_family("cycle-5", 0).vertex_count() == 5);
  CHECK(build_family("tree-4", 2).vertex_count() == 17);
  CHECK(build_family("grid-3", 1).vertex_count() == 27);
  CHECK_THROWS_AS(build_family("moebius", 1), invalid_argument);
}

TEST_CASE("induced subgraphs") {
  Graph arc = induced_subgraph(cycle_graph(8), {0, 1, 2, 3, 4});
  CHECK(isomorphic(arc, path_graph(5)).isomorphic);
  CHECK(arc.label(4) == "4");
  CHECK(induced_subgraph(complete_graph(4), {1, 3}).edge_count() == 1);
}
