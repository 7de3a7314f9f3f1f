#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "lamplighter/amenability.hpp"

namespace lamplighter {

namespace {

void require_tabulated(const QIMap& f) {
  if (!f.source || !f.target) throw invalid_argument("quasi-isometry without graphs");
  if (f.image.size() != f.source->vertex_count()) throw invalid_argument("map " + f.name + " is not fully tabulated");
  for (Vertex y : f.image) f.target->check_vertex(y);
}

}  // namespace

QIMap qi_identity(const Graph& g) {
  QIMap f{&g, &g, {}, 1, 0, "identity"};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) f.image.push_back(static_cast<Vertex>(v));
  return f;
}

QIMap qi_from_labels(const Graph& source, const Graph& target, const std::function<std::string(const std::string&)>& f,
                     int a, double b, const std::string& name) {
  QIMap m{&source, &target, {}, a, b, name};
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    const std::string label = f(source.label(static_cast<Vertex>(v)));
    auto w = target.try_find(label);
    if (!w) throw window_error(name + " sends " + source.label(static_cast<Vertex>(v)) + " outside the target window");
    m.image.push_back(*w);
  }
  return m;
}

QIMap qi_compose(const QIMap& first, const QIMap& second) {
  require_tabulated(first);
  require_tabulated(second);
  if (first.target != second.source) throw invalid_argument("composition across different graphs");
  QIMap out{first.source, second.target, {}, first.a * second.a, second.a * first.b + second.b,
            second.name + "*" + first.name};
  for (Vertex y : first.image) out.image.push_back(second.image[y]);
  return out;
}

QIFit qi_fit(const QIMap& f, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  require_tabulated(f);
  const DistanceMatrix src(*f.source), tgt(*f.target);
  std::vector<std::pair<int, int>> distances;
  if (pairs.empty()) {
    const auto n = static_cast<Vertex>(f.source->vertex_count());
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) distances.emplace_back(src(x, y), tgt(f.image[x], f.image[y]));
  } else {
    for (auto [x, y] : pairs) distances.emplace_back(src(x, y), tgt(f.image[x], f.image[y]));
  }
  QIFit fit;
  fit.distances = fit_affine(distances);
  const auto hit = distances_from_set(*f.target, make_set(f.image));
  for (int d : hit) fit.coverage = std::max(fit.coverage, d == kUnreachable ? std::numeric_limits<int>::max() : d);
  fit.a = fit.distances.a;
  fit.b = std::max(fit.distances.b, static_cast<double>(fit.coverage));
  // A fit (a, b) implies (A, B) for every A >= a once b <= B.
  fit.within_declared = fit.a <= f.a && fit.b <= f.b + 1e-9;
  return fit;
}

QIFit qi_verify(const QIMap& f, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  QIFit fit = qi_fit(f, pairs);
  if (fit.coverage > f.b + 1e-9)
    throw window_error("coverage gap " + std::to_string(fit.coverage) + " exceeds declared B for " + f.name);
  return fit;
}

QIMap quasi_inverse(const QIMap& f) {
  require_tabulated(f);
  QIMap g{f.target, f.source, {}, f.a, 3.0 * f.a * f.b, "inverse(" + f.name + ")"};
  // Multi-source BFS from the image, remembering the smallest witness.
  const std::size_t n = f.target->vertex_count();
  std::vector<int> dist(n, kUnreachable);
  std::vector<Vertex> witness(n, -1);
  std::vector<Vertex> frontier;
  for (std::size_t x = 0; x < f.image.size(); ++x) {
    const Vertex y = f.image[x];
    if (dist[y] == kUnreachable) {
      dist[y] = 0;
      witness[y] = static_cast<Vertex>(x);
      frontier.push_back(y);
    }
  }
  for (int level = 0; !frontier.empty(); ++level) {
    std::vector<Vertex> next;
    for (Vertex y : frontier)
      for (Vertex z : f.target->neighbors(y)) {
        if (dist[z] == kUnreachable) {
          dist[z] = level + 1;
          witness[z] = witness[y];
          next.push_back(z);
        } else if (dist[z] == level + 1) {
          witness[z] = std::min(witness[z], witness[y]);
        }
      }
    frontier = std::move(next);
  }
  for (std::size_t y = 0; y < n; ++y)
    if (witness[y] < 0) throw disconnected_error("target vertex " + f.target->label(static_cast<Vertex>(y)) + " is not near the image");
  g.image = std::move(witness);
  return g;
}

int distance_to_identity(const QIMap& f) {
  require_tabulated(f);
  if (f.source != f.target) throw invalid_argument("distance to identity needs a self-map");
  int worst = 0;
  for (std::size_t x = 0; x < f.image.size(); ++x) {
    const int d = distances_from(*f.source, static_cast<Vertex>(x))[f.image[x]];
    if (d == kUnreachable) return std::numeric_limits<int>::max();
    worst = std::max(worst, d);
  }
  return worst;
}

std::vector<VertexSet> fibres(const QIMap& f) {
  require_tabulated(f);
  std::vector<VertexSet> out(f.target->vertex_count());
  for (std::size_t x = 0; x < f.image.size(); ++x) out[f.image[x]].push_back(static_cast<Vertex>(x));
  return out;
}

int displacement(const QIMap& f) { return distance_to_identity(f); }

KappaReport quasi_kappa_check(const QIMap& f, Rational kappa, int radius, long constant, int max_balls, std::size_t cap,
                              unsigned seed) {
  require_tabulated(f);
  if (kappa.den <= 0 || kappa.num < 0) throw invalid_argument("kappa must be a non-negative fraction");
  if (radius < 0 || max_balls < 1) throw invalid_argument("bad thick-set parameters");
  const Graph& y = *f.target;

  VertexSet rim;
  for (std::size_t v = 0; v < y.vertex_count(); ++v)
    if (y.on_rim(static_cast<Vertex>(v))) rim.push_back(static_cast<Vertex>(v));
  const auto rim_dist = rim.empty() ? std::vector<int>(y.vertex_count(), kNoRim) : distances_from_set(y, rim);
  std::vector<Vertex> centres;
  for (std::size_t v = 0; v < y.vertex_count(); ++v)
    if (rim_dist[v] == kUnreachable || rim_dist[v] > radius) centres.push_back(static_cast<Vertex>(v));
  if (centres.empty()) throw window_error("no ball of radius " + std::to_string(radius) + " fits inside the window");

  std::vector<int> preimages(y.vertex_count(), 0);
  for (Vertex v : f.image) ++preimages[v];

  KappaReport r;
  r.kappa = kappa;
  r.radius = radius;
  r.constant = constant;
  std::set<VertexSet> seen;
  auto test = [&](const VertexSet& s, const std::string& name) {
    if (!seen.insert(s).second) return;
    long pre = 0;
    for (Vertex v : s) pre += preimages[v];
    const long residual = std::labs(kappa.den * pre - kappa.num * static_cast<long>(s.size()));
    const long bdry = static_cast<long>(boundary(y, s).size());
    const bool ok = residual <= constant * kappa.den * bdry;
    const double ratio = bdry ? static_cast<double>(residual) / static_cast<double>(kappa.den * bdry)
                              : (residual ? std::numeric_limits<double>::infinity() : 0.0);
    r.residuals.push_back(ratio);
    if (r.residuals.size() == 1 || ratio > r.worst) {
      r.worst = ratio;
      r.worst_set = name;
    }
    r.pass = r.pass && ok;
  };

  for (Vertex c : centres) {
    if (seen.size() >= cap) break;
    test(ball(y, c, radius), "B(" + y.label(c) + ")");
  }
  std::mt19937_64 rng(seed);
  std::size_t attempts = 0;
  while (seen.size() < cap && max_balls > 1 && attempts++ < 20 * cap) {
    const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_balls - 1));
    VertexSet s;
    std::string name;
    for (int i = 0; i < k; ++i) {
      const Vertex c = centres[rng() % centres.size()];
      s = set_union(s, ball(y, c, radius));
      name += (i ? "+B(" : "B(") + y.label(c) + ")";
    }
    test(s, name);
  }
  r.sets = r.residuals.size();
  return r;
}

}  // namespace lamplighter
