#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "lamplighter/amenability.hpp"

namespace lamplighter {

namespace {

long long power(long long base, std::size_t exp) {
  long long out = 1;
  for (std::size_t k = 0; k < exp; ++k) out *= base;
  return out;
}

std::vector<int> rim_distances(const Graph& g) {
  VertexSet rim;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.on_rim(static_cast<Vertex>(v))) rim.push_back(static_cast<Vertex>(v));
  if (rim.empty()) return std::vector<int>(g.vertex_count(), kNoRim);
  auto d = distances_from_set(g, rim);
  for (int& x : d)
    if (x == kUnreachable) x = kNoRim;
  return d;
}

void require_interior(const Graph& g, const VertexSet& s, const std::string& what) {
  for (Vertex v : s)
    if (g.on_rim(v)) throw window_error(what + " touches the window rim at " + g.label(v));
}

}  // namespace

FolnerCertificate folner_boxes(int dim, const std::vector<int>& sides) {
  FolnerCertificate cert;
  double previous = 0;
  for (int n : sides) {
    if (n < 1) throw invalid_argument("box side must be positive");
    Graph g = grid_window(dim, -1, n);
    VertexSet box;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const std::string& label = g.label(static_cast<Vertex>(v));
      bool inside = true;
      std::size_t start = 0;
      while (start <= label.size()) {
        std::size_t comma = label.find(',', start);
        if (comma == std::string::npos) comma = label.size();
        const int x = std::stoi(label.substr(start, comma - start));
        inside = inside && x >= 0 && x < n;
        start = comma + 1;
      }
      if (inside) box.push_back(static_cast<Vertex>(v));
    }
    require_interior(g, box, "box");
    FolnerEntry e;
    e.label = "[" + std::to_string(n) + "]^" + std::to_string(dim);
    e.size = box.size();
    e.boundary = boundary(g, box).size();
    e.expected = 2LL * dim * power(n, static_cast<std::size_t>(dim - 1));
    e.matches = static_cast<long long>(e.boundary) == e.expected;
    e.ratio = static_cast<double>(e.boundary) / static_cast<double>(e.size);
    e.window = g.window_family() + " " + g.window_params();
    if (!cert.entries.empty() && e.ratio > previous) cert.monotone = false;
    previous = e.ratio;
    cert.exact = cert.exact && e.matches;
    cert.entries.push_back(e);
  }
  return cert;
}

WreathFolner folner_wreath(const WreathSpace& w, const VertexSet& lamp_set, const VertexSet& base_set,
                           std::size_t cap) {
  const VertexSet a = make_set(lamp_set), b = make_set(base_set);
  if (a.empty() || b.empty()) throw invalid_argument("Folner sets must be non-empty");
  require_interior(w.lamp(), a, "lamp set");
  require_interior(w.base(), b, "base set");
  const double count = static_cast<double>(b.size()) * std::pow(static_cast<double>(a.size()), b.size());
  if (count > static_cast<double>(cap)) throw cap_exceeded("Folner set has more than " + std::to_string(cap) + " vertices");

  WreathFolner r;
  r.expected_size = static_cast<long long>(b.size()) * power(static_cast<long long>(a.size()), b.size());
  const long long da = static_cast<long long>(boundary(w.lamp(), a).size());
  const long long db = static_cast<long long>(boundary(w.base(), b).size());
  r.product_formula = static_cast<long long>(b.size()) * da + db;
  r.general_formula = static_cast<long long>(b.size()) * da * power(static_cast<long long>(a.size()), b.size() - 1) +
                      db * power(static_cast<long long>(a.size()), b.size());

  std::set<LampVertex> members;
  std::vector<std::size_t> digits(b.size(), 0);
  while (true) {
    Colouring c;
    for (std::size_t k = 0; k < b.size(); ++k) c[b[k]] = a[digits[k]];
    c = w.canonical(std::move(c));
    for (Vertex p : b) members.insert(LampVertex{c, p});
    std::size_t k = 0;
    while (k < b.size() && ++digits[k] == a.size()) digits[k++] = 0;
    if (k == b.size()) break;
  }
  std::set<LampVertex> outside;
  for (const auto& v : members)
    for (auto& u : neighbors(w, v))
      if (!members.count(u)) outside.insert(std::move(u));
  r.size = members.size();
  r.boundary = outside.size();
  return r;
}

TreeBoundary tree_subtree_boundary(const Graph& tree, const VertexSet& subtree, int degree) {
  const VertexSet s = make_set(subtree);
  if (s.empty()) throw invalid_argument("empty subtree");
  require_interior(tree, s, "subtree");
  for (Vertex v : s)
    if (tree.degree(v) != degree) throw invalid_argument("ambient tree is not " + std::to_string(degree) + "-regular at " + tree.label(v));
  Graph induced = induced_subgraph(tree, s);
  if (!is_connected(induced) || induced.edge_count() + 1 != induced.vertex_count())
    throw invalid_argument("vertex set does not span a subtree");
  TreeBoundary r;
  r.size = s.size();
  r.boundary = boundary(tree, s).size();
  r.bound = static_cast<long long>(degree - 2) * static_cast<long long>(s.size()) + 2;
  r.holds = static_cast<long long>(r.boundary) >= r.bound;
  return r;
}

VertexSet random_subtree(const Graph& tree, Vertex start, std::size_t size, int margin, std::mt19937_64& rng) {
  const auto rim = rim_distances(tree);
  if (rim[start] < margin) throw window_error("subtree start too close to the rim");
  std::vector<Vertex> members{start};
  std::vector<char> in(tree.vertex_count(), 0);
  in[start] = 1;
  while (members.size() < size) {
    std::vector<Vertex> frontier;
    for (Vertex v : members)
      for (Vertex w : tree.neighbors(v))
        if (!in[w] && rim[w] >= margin) frontier.push_back(w);
    frontier = make_set(std::move(frontier));
    if (frontier.empty()) break;
    Vertex pick = frontier[rng() % frontier.size()];
    in[pick] = 1;
    members.push_back(pick);
  }
  return make_set(std::move(members));
}

}  // namespace lamplighter
