#include <algorithm>
#include <limits>
#include <memory>
#include <random>
#include <set>

#include "lamplighter/amenability.hpp"

namespace lamplighter {

namespace {

long int_power(long base, int exp) {
  long out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

void require_same_base(const Graph& a, const Graph& b, const std::string& what) {
  if (a.vertex_count() != b.vertex_count()) throw invalid_argument(what + ": base graphs differ");
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    if (a.label(static_cast<Vertex>(v)) != b.label(static_cast<Vertex>(v))) throw invalid_argument(what + ": base graphs differ");
}

Colouring random_colouring(const WreathSpace& w, int lamps, std::mt19937_64& rng) {
  Colouring c;
  const int k = static_cast<int>(rng() % static_cast<unsigned>(lamps + 1));
  for (int i = 0; i < k; ++i)
    c[static_cast<Vertex>(rng() % w.base().vertex_count())] = 1 + static_cast<int>(rng() % (w.lamp_size() - 1));
  return w.canonical(std::move(c));
}

VertexSet image_of(const std::vector<Vertex>& map, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out.push_back(map[v]);
  return make_set(std::move(out));
}

bool subset(const VertexSet& a, const VertexSet& b) { return set_difference(a, b).empty(); }

}  // namespace

std::vector<Vertex> tree_ray(const Graph& tree, int length) {
  std::vector<Vertex> ray;
  std::string label = "r";
  for (int k = 0; k <= length; ++k) {
    auto v = tree.try_find(label);
    if (!v) throw window_error("ray of length " + std::to_string(length) + " leaves the tree window");
    ray.push_back(*v);
    label += "0";
  }
  return ray;
}

QIMap toward_end_map(const Graph& tree, const std::vector<Vertex>& ray) {
  if (ray.empty()) throw invalid_argument("empty ray");
  for (std::size_t i = 0; i + 1 < ray.size(); ++i)
    if (!tree.adjacent(ray[i], ray[i + 1])) throw invalid_argument("ray is not a path");
  if (make_set(ray).size() != ray.size()) throw invalid_argument("ray repeats a vertex");
  const auto to_ray = distances_from_set(tree, make_set(ray));
  QIMap f{&tree, &tree, std::vector<Vertex>(tree.vertex_count(), -1), 1, 2, "toward-end"};
  for (std::size_t i = 0; i < ray.size(); ++i) f.image[ray[i]] = ray[std::min(i + 1, ray.size() - 1)];
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (f.image[v] >= 0) continue;
    if (to_ray[v] == kUnreachable) throw disconnected_error("tree window is disconnected");
    for (Vertex w : tree.neighbors(static_cast<Vertex>(v)))
      if (to_ray[w] == to_ray[v] - 1) f.image[v] = w;
  }
  return f;
}

AptolicMap aptolic_nonamenable(const WreathSpace& source, const WreathSpace& target, int m, int p, int n,
                               const QIMap& f) {
  if (m < 1 || p < 2 || n < 1) throw invalid_argument("need m >= 1, p >= 2, n >= 1");
  if (source.modulus() != m * p) throw invalid_argument("source must be L_" + std::to_string(m * p));
  if (target.modulus() != m * int_power(p, n)) throw invalid_argument("target must be L_" + std::to_string(m * int_power(p, n)));
  require_same_base(source.base(), target.base(), "non-amenable construction");
  if (!f.source || f.source != f.target) throw invalid_argument("the n-to-one map must be a self-map");
  require_same_base(*f.source, source.base(), "n-to-one map");

  auto fib = std::make_shared<std::vector<VertexSet>>(fibres(f));
  const Graph& base = source.base();
  for (std::size_t x = 0; x < fib->size(); ++x) {
    const std::size_t k = (*fib)[x].size();
    if (k > static_cast<std::size_t>(n) || (!base.on_rim(static_cast<Vertex>(x)) && k != static_cast<std::size_t>(n)))
      throw invalid_argument("fibre over " + base.label(static_cast<Vertex>(x)) + " has " + std::to_string(k) +
                             " points, expected " + std::to_string(n));
  }
  auto image = std::make_shared<std::vector<Vertex>>(f.image);
  auto alpha = [fib, image, m, p](const Colouring& c) {
    std::vector<Vertex> touched;
    for (const auto& [x, colour] : c) {
      touched.push_back(x);
      touched.push_back((*image)[x]);
    }
    auto at = [&c](Vertex x) {
      auto it = c.find(x);
      return it == c.end() ? 0 : it->second;
    };
    Colouring out;
    for (Vertex x : make_set(std::move(touched))) {
      long colour = at(x) % m, place = m;
      for (Vertex y : (*fib)[x]) {
        colour += place * (at(y) / m);
        place *= p;
      }
      if (colour) out[x] = static_cast<int>(colour);
    }
    return out;
  };
  std::vector<Vertex> beta(base.vertex_count());
  for (std::size_t v = 0; v < beta.size(); ++v) beta[v] = static_cast<Vertex>(v);
  return AptolicMap{&source, &target, alpha, all_vertices(base), beta, "non-amenable(" + f.name + ")"};
}

NonamenableReport verify_nonamenable(const AptolicMap& map, const QIMap& f, int n, std::size_t pairs, int lamps,
                                     unsigned seed) {
  NonamenableReport r;
  r.n = n;
  r.displacement = displacement(f);
  const double c = r.displacement;
  const double stated_hi = 2 * c + 1, stated_lo = 1 / (2 * n * c + 1);
  const double derived_hi = 2 * c + 2, derived_lo = 1 / (2 * n * c + n + 1);
  const auto fib = fibres(f);
  std::mt19937_64 rng(seed);
  const WreathSpace& src = *map.source;
  bool first = true;
  for (std::size_t k = 0; k < pairs; ++k) {
    LampVertex x{random_colouring(src, lamps, rng), static_cast<Vertex>(rng() % src.base().vertex_count())};
    LampVertex y{random_colouring(src, lamps, rng), static_cast<Vertex>(rng() % src.base().vertex_count())};
    const LampVertex fx = aptolic_apply(map, x), fy = aptolic_apply(map, y);
    const VertexSet diff = colouring_difference(x.colours, y.colours);
    const VertexSet bar = colouring_difference(fx.colours, fy.colours);
    VertexSet pulled;
    for (Vertex v : bar) pulled = set_union(pulled, fib[v]);
    if (!subset(bar, set_union(diff, image_of(f.image, diff))) && r.first_inclusion) {
      r.first_inclusion = false;
      r.failure = "first inclusion fails at " + src.format(x) + " / " + src.format(y);
    }
    if (!subset(diff, set_union(bar, pulled)) && r.second_inclusion) {
      r.second_inclusion = false;
      if (r.failure.empty()) r.failure = "second inclusion fails at " + src.format(x) + " / " + src.format(y);
    }
    const int d = lamp_distance(src, x, y);
    const int e = lamp_distance(*map.target, fx, fy);
    ++r.pairs;
    if (d == 0) continue;
    const double ratio = static_cast<double>(e) / d;
    r.min_ratio = first ? ratio : std::min(r.min_ratio, ratio);
    r.max_ratio = first ? ratio : std::max(r.max_ratio, ratio);
    first = false;
    r.within_stated = r.within_stated && ratio <= stated_hi + 1e-12 && ratio >= stated_lo - 1e-12;
    r.within_derived = r.within_derived && ratio <= derived_hi + 1e-12 && ratio >= derived_lo - 1e-12;
  }
  return r;
}

AptolicMap aptolic_amenable(const WreathSpace& source, const WreathSpace& target, const AmenableInput& in) {
  if (in.q < 2 || in.a < 1 || in.b < 1) throw invalid_argument("need q >= 2 and positive piece sizes");
  const long source_colours = int_power(in.q, in.a), target_colours = int_power(in.q, in.b);
  if (source.modulus() != source_colours || target.modulus() != target_colours)
    throw invalid_argument("lamp sizes must be q^a (source) and q^b (target)");
  const Graph& x = source.base();
  const Graph& y = target.base();
  auto check_partition = [](const Graph& g, const std::vector<VertexSet>& pieces, int size, const std::string& what) {
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (static_cast<int>(pieces[k].size()) != size)
        throw invalid_argument(what + " piece " + std::to_string(k) + " has size " + std::to_string(pieces[k].size()) +
                               ", expected " + std::to_string(size));
      for (Vertex v : pieces[k]) {
        g.check_vertex(v);
        if (owner[v] >= 0) throw invalid_argument(what + " pieces overlap at " + g.label(v));
        owner[v] = static_cast<int>(k);
      }
    }
    for (std::size_t v = 0; v < owner.size(); ++v)
      if (owner[v] < 0) throw invalid_argument(what + " pieces miss " + g.label(static_cast<Vertex>(v)));
    return owner;
  };
  auto source_owner = std::make_shared<std::vector<int>>(check_partition(x, in.source_pieces, in.b, "source"));
  check_partition(y, in.target_pieces, in.a, "target");
  if (in.piece_map.size() != in.source_pieces.size() || in.source_pieces.size() != in.target_pieces.size())
    throw invalid_argument("piece map must pair source and target pieces");
  std::vector<int> sorted = in.piece_map;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k)) throw invalid_argument("piece map is not a bijection");
  if (in.beta.size() != x.vertex_count()) throw invalid_argument("beta does not cover the source base");
  for (std::size_t k = 0; k < in.source_pieces.size(); ++k)
    for (Vertex v : in.source_pieces[k])
      if (!contains(make_set(in.target_pieces[in.piece_map[k]]), in.beta[v]))
        throw invalid_argument("beta sends " + x.label(v) + " outside its paired piece");
  std::function<long(long)> sigma = in.sigma ? in.sigma : [](long code) { return code; };
  if (sigma(0) != 0) throw invalid_argument("sigma must fix 0");

  struct Pieces {
    std::vector<VertexSet> from, to;
    std::vector<int> pairing;
  };
  auto pieces = std::make_shared<Pieces>();
  for (const auto& s : in.source_pieces) pieces->from.push_back(make_set(s));
  for (const auto& s : in.target_pieces) pieces->to.push_back(make_set(s));
  pieces->pairing = in.piece_map;
  auto alpha = [pieces, source_owner, sigma, source_colours, target_colours](const Colouring& c) {
    std::set<int> touched;
    for (const auto& [v, colour] : c) touched.insert((*source_owner)[v]);
    Colouring out;
    for (int k : touched) {
      long code = 0, place = 1;
      for (Vertex v : pieces->from[k]) {
        auto it = c.find(v);
        code += place * (it == c.end() ? 0 : it->second);
        place *= source_colours;
      }
      long image = sigma(code);
      for (Vertex w : pieces->to[pieces->pairing[k]]) {
        if (image % target_colours) out[w] = static_cast<int>(image % target_colours);
        image /= target_colours;
      }
    }
    return out;
  };
  return AptolicMap{&source, &target, alpha, all_vertices(x), in.beta, "amenable"};
}

AmenableReport verify_amenable(const AptolicMap& map, const AmenableInput& in, std::size_t samples, unsigned seed) {
  AmenableReport r;
  r.pieces_ok = true;  // construction validated the partitions
  const long codes = int_power(in.q, in.a * in.b);
  std::function<long(long)> sigma = in.sigma ? in.sigma : [](long code) { return code; };
  if (codes <= (1L << 20)) {
    std::vector<char> hit(static_cast<std::size_t>(codes), 0);
    r.sigma_bijective = true;
    for (long code = 0; code < codes; ++code) {
      const long image = sigma(code);
      if (image < 0 || image >= codes || hit[image]) {
        r.sigma_bijective = false;
        break;
      }
      hit[image] = 1;
    }
  }
  const Graph& x = map.source->base();
  const Graph& y = map.target->base();
  const DistanceMatrix dx(x), dy(y);
  std::vector<std::pair<int, int>> distances;
  for (std::size_t u = 0; u < x.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < x.vertex_count(); ++v)
      distances.emplace_back(dx(static_cast<Vertex>(u), static_cast<Vertex>(v)), dy(map.beta[u], map.beta[v]));
  r.beta_fit = fit_affine(distances);

  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const Colouring c1 = random_colouring(*map.source, 4, rng), c2 = random_colouring(*map.source, 4, rng);
    const VertexSet moved = image_of(map.beta, colouring_difference(c1, c2));
    const VertexSet changed = colouring_difference(aptolic_alpha(map, c1), aptolic_alpha(map, c2));
    ++r.samples;
    if (moved.empty() != changed.empty()) {
      r.hausdorff = std::numeric_limits<int>::max();
      break;
    }
    auto one_sided = [&](const VertexSet& from, const VertexSet& to) {
      int worst = 0;
      for (Vertex a : from) {
        int best = std::numeric_limits<int>::max();
        for (Vertex b : to) best = std::min(best, dy(a, b));
        worst = std::max(worst, best);
      }
      return worst;
    };
    r.hausdorff = std::max({r.hausdorff, one_sided(moved, changed), one_sided(changed, moved)});
  }
  return r;
}

DistortionRow distortion_row(int n, std::size_t cap) {
  if (n < 1) throw invalid_argument("distortion needs n >= 1");
  WreathGroup g{0, {0}};
  WreathElement x;
  x.lamps[{0}] = n;
  x.lamps[{static_cast<long>(n)}] = -n;
  x.base = {static_cast<long>(n)};
  const WreathElement a = lamp_generator(g), t = shift_generator(g);
  const WreathElement commutator = wreath_word(g, {a, t, wreath_inv(g, a), wreath_inv(g, t)});
  DistortionRow row;
  row.n = n;
  row.standard = word_length(g, {a, t}, x, cap);
  row.commutator = word_length(g, {commutator, t}, x, cap);
  if (row.standard > 0 && row.commutator > 0) row.ratio = static_cast<double>(row.commutator) / static_cast<double>(row.standard);
  return row;
}

}  // namespace lamplighter
