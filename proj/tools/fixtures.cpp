#include <functional>
#include <sstream>

#include "commands.hpp"
#include "lamplighter/amenability.hpp"
#include "lamplighter/homotopy.hpp"

namespace lampctl {

using namespace lamplighter;

Graph corner_cut_cube() {
  Graph g;
  for (int corner = 0; corner < 8; ++corner)
    for (int axis = 0; axis < 3; ++axis) g.add_vertex(std::to_string(corner) + "/" + std::to_string(axis));
  for (int corner = 0; corner < 8; ++corner)
    for (int axis = 0; axis < 3; ++axis) {
      const Vertex v = corner * 3 + axis;
      for (int other = axis + 1; other < 3; ++other) g.add_edge(v, corner * 3 + other);
      const int far = corner ^ (1 << axis);
      if (corner < far) g.add_edge(v, far * 3 + axis);
    }
  return g;
}

namespace {

std::pair<bool, std::string> verdict(bool ok, const std::string& detail) { return {ok, detail}; }

}  // namespace

std::vector<FixtureResult> run_fixtures() {
  std::vector<std::pair<std::string, std::function<std::pair<bool, std::string>()>>> fixtures{
      {"grid box boundary",
       [] {
         Graph g = grid_window(2, -5, 5);
         VertexSet box;
         for (int x = -1; x <= 1; ++x)
           for (int y = -1; y <= 1; ++y) box.push_back(g.find(std::to_string(x) + "," + std::to_string(y)));
         const auto b = boundary(g, make_set(box)).size();
         return verdict(b == 12, "|dS| = " + std::to_string(b));
       }},
      {"wreath of two edges is an 8-cycle",
       [] {
         auto w = WreathSpace(complete_graph(2), 0, complete_graph(2));
         auto win = materialize_full(w);
         bool two_regular = true;
         for (std::size_t v = 0; v < win.graph.vertex_count(); ++v)
           two_regular = two_regular && win.graph.degree(static_cast<Vertex>(v)) == 2;
         const bool iso = isomorphic(win.graph, cycle_graph(8)).isomorphic;
         return verdict(iso && two_regular && win.graph.vertex_count() == 8,
                        std::to_string(win.graph.vertex_count()) + " vertices, C8 " + (iso ? "yes" : "no"));
       }},
      {"lamplighter over a triangle is the truncated cube",
       [] {
         auto win = materialize_full(WreathSpace::lamplighter(2, complete_graph(3)));
         const bool iso = isomorphic(win.graph, corner_cut_cube()).isomorphic;
         return verdict(iso && win.graph.vertex_count() == 24 && win.graph.edge_count() == 36,
                        std::to_string(win.graph.vertex_count()) + " vertices, " +
                            std::to_string(win.graph.edge_count()) + " edges");
       }},
      {"Cayley graph of Z2 wr Z3 is L_2(C_3)",
       [] {
         WreathGroup g{2, {3}};
         Graph cay = cayley_graph(g, {lamp_generator(g), shift_generator(g)}, -1);
         auto win = materialize_full(WreathSpace::lamplighter(2, cycle_graph(3)));
         return verdict(isomorphic(cay, win.graph).isomorphic, std::to_string(cay.vertex_count()) + " vertices");
       }},
      {"Cayley ball of Z2 wr Z with {t, at} matches the Diestel-Leader ball",
       [] {
         WreathGroup g{2, {0}};
         auto t = shift_generator(g);
         auto at = wreath_mul(g, lamp_generator(g), t);
         Graph cay = cayley_graph(g, {t, at}, 3);
         Graph dl = dl_graph(2, 3);
         return verdict(isomorphic(cay, dl).isomorphic, std::to_string(dl.vertex_count()) + " vertices");
       }},
      {"inner part diameter bound on L_2(line)",
       [] {
         auto w = WreathSpace::lamplighter(2, line_window(-30, 30));
         const Vertex zero = w.base().find("0");
         auto s = stringy_witness(w, {{}, zero}, {{{w.base().find("10"), 1}}, w.base().find("20")}, 1, 3);
         return verdict(s.diameter <= s.bound && s.bound == 20,
                        "diameter " + std::to_string(s.diameter) + " <= " + std::to_string(s.bound));
       }},
      {"typical square of leaves",
       [] {
         auto w = WreathSpace::lamplighter(2, line_window(-20, 20));
         Colouring a{{w.base().find("-8"), 1}}, b{{w.base().find("8"), 1}};
         auto sq = detect_square(w, {Colouring{}, a, add_colourings(2, a, b), b}, 1, 4);
         return verdict(sq.ok && sq.base.empty() && sq.first == a && sq.second == b, sq.ok ? "recovered" : sq.failure);
       }},
      {"box boundaries 2dn^(d-1)",
       [] {
         const auto two = folner_boxes(2, {4}).entries[0].boundary;
         const auto three = folner_boxes(3, {3}).entries[0].boundary;
         return verdict(two == 16 && three == 54, std::to_string(two) + ", " + std::to_string(three));
       }},
      {"single tree vertex has boundary d",
       [] {
         Graph t3 = tree_window(3, 3);
         auto r = tree_subtree_boundary(t3, {t3.find("r")}, 3);
         return verdict(r.boundary == 3 && r.holds, std::to_string(r.boundary) + " >= " + std::to_string(r.bound));
       }},
      {"staircase map is a (1,1)-quasi-isometry",
       [] {
         Graph line = line_window(-50, 50);
         auto f = qi_from_labels(line, line, [](const std::string& s) {
           const int k = std::stoi(s);
           return std::to_string(2 * (k >= 0 ? k / 2 : -((-k + 1) / 2)));
         }, 1, 1, "staircase");
         auto fit = qi_verify(f);
         std::ostringstream detail;
         detail << "(" << fit.a << "," << fit.b << ")";
         return verdict(fit.a == 1 && fit.b == 1, detail.str());
       }},
      {"toward-end map fibres on T_4",
       [] {
         Graph t4 = tree_window(4, 4);
         auto f = toward_end_map(t4, tree_ray(t4, 4));
         auto fib = fibres(f);
         bool ok = true;
         for (std::size_t v = 0; v < fib.size(); ++v)
           if (!t4.on_rim(static_cast<Vertex>(v))) ok = ok && fib[v].size() == 3;
         return verdict(ok, "interior fibres of size 3");
       }},
      {"non-amenable map: support inclusion",
       [] {
         Graph t4 = tree_window(4, 4);
         auto f = toward_end_map(t4, tree_ray(t4, 4));
         auto source = WreathSpace::lamplighter(6, t4), target = WreathSpace::lamplighter(24, t4);
         auto phi = aptolic_nonamenable(source, target, 3, 2, 3, f);
         auto r = verify_nonamenable(phi, f, 3, 100, 3, 11);
         return verdict(r.first_inclusion, std::to_string(r.pairs) + " pairs");
       }},
      {"non-amenable map: sampled upper slope <= 2C+1",
       [] {
         Graph t4 = tree_window(4, 4);
         auto f = toward_end_map(t4, tree_ray(t4, 4));
         auto source = WreathSpace::lamplighter(6, t4), target = WreathSpace::lamplighter(24, t4);
         auto phi = aptolic_nonamenable(source, target, 3, 2, 3, f);
         auto r = verify_nonamenable(phi, f, 3, 50, 3, 13);
         std::ostringstream detail;
         detail << "max ratio " << r.max_ratio << " on " << r.pairs << " random pairs";
         return verdict(r.max_ratio <= 3, detail.str());
       }},
  };
  std::vector<FixtureResult> out;
  for (const auto& [name, body] : fixtures) {
    FixtureResult r{name, false, ""};
    try {
      std::tie(r.pass, r.detail) = body();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace lampctl
