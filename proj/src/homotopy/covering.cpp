#include <algorithm>
#include <random>
#include <set>

#include "lamplighter/homotopy.hpp"

namespace lamplighter {

Covering explicit_covering(const std::map<std::string, VertexSet>& parts, int scale, const std::string& name) {
  std::map<Vertex, std::vector<std::string>> index;
  for (const auto& [key, members] : parts)
    for (Vertex v : members) index[v].push_back(key);
  for (auto& [v, keys] : index) std::sort(keys.begin(), keys.end());
  return Covering{name, scale, [index = std::move(index)](Vertex v) {
                    auto it = index.find(v);
                    return it == index.end() ? std::vector<std::string>{} : it->second;
                  }};
}

VertexSet part_members(const Graph& g, const Covering& cov, const std::string& key) {
  VertexSet out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto keys = cov.parts(static_cast<Vertex>(v));
    if (std::binary_search(keys.begin(), keys.end(), key)) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

namespace {

std::vector<std::string> common(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

constexpr std::size_t kTripleBudget = 500'000;

}  // namespace

CoveringReport verify_covering(const Graph& g, const Covering& cov, std::size_t samples, unsigned seed) {
  CoveringReport report;
  const std::size_t n = g.vertex_count();
  const int scale = cov.scale;
  DistanceMatrix dm(g);
  auto close = [&](Vertex a, Vertex b) { return dm(a, b) != kUnreachable && dm(a, b) <= scale; };
  auto fail = [&](const std::string& why) {
    report.ok = false;
    report.failure = why;
    return report;
  };

  std::vector<std::vector<std::string>> parts(n);
  std::map<std::string, std::size_t> ids;
  for (std::size_t v = 0; v < n; ++v) {
    parts[v] = cov.parts(static_cast<Vertex>(v));
    if (parts[v].empty()) return fail("vertex " + g.label(static_cast<Vertex>(v)) + " lies in no part");
    for (const auto& k : parts[v]) ids.emplace(k, ids.size());
  }
  report.part_count = ids.size();

  std::vector<std::vector<Vertex>> near(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (close(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
        near[u].push_back(static_cast<Vertex>(v));
        ++report.sets_checked;
        if (common(parts[u], parts[v]).empty())
          return fail("pair {" + g.label(static_cast<Vertex>(u)) + "," + g.label(static_cast<Vertex>(v)) +
                      "} lies in no single part");
      }

  std::size_t triples = 0;
  for (std::size_t u = 0; u < n && triples < kTripleBudget; ++u)
    for (Vertex v : near[u])
      for (Vertex x : near[v]) {
        if (!close(static_cast<Vertex>(u), x)) continue;
        ++triples;
        if (common(common(parts[u], parts[v]), parts[x]).empty())
          return fail("triple {" + g.label(static_cast<Vertex>(u)) + "," + g.label(v) + "," + g.label(x) +
                      "} lies in no single part");
      }
  report.sets_checked += triples;

  std::mt19937 rng(seed);
  for (std::size_t s = 0; s < samples && n > 0; ++s) {
    Vertex v = static_cast<Vertex>(rng() % n);
    std::vector<Vertex> set{v};
    auto keys = parts[v];
    std::vector<Vertex> pool = near[v];
    std::shuffle(pool.begin(), pool.end(), rng);
    for (Vertex x : pool) {
      if (set.size() >= 6) break;
      if (!std::all_of(set.begin(), set.end(), [&](Vertex y) { return close(x, y); })) continue;
      set.push_back(x);
      keys = common(keys, parts[x]);
    }
    ++report.sets_checked;
    if (keys.empty()) return fail("sampled set around " + g.label(v) + " lies in no single part");
  }

  std::vector<std::set<std::size_t>> adj(ids.size());
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 0; a < parts[v].size(); ++a)
      for (std::size_t b = a + 1; b < parts[v].size(); ++b) {
        auto x = ids[parts[v][a]], y = ids[parts[v][b]];
        adj[x].insert(y);
        adj[y].insert(x);
      }
  std::vector<std::string> names(ids.size());
  for (const auto& [k, i] : ids) names[i] = k;
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (std::size_t b : adj[a]) {
      if (b <= a) continue;
      ++report.nerve_edges;
      for (std::size_t c : adj[b])
        if (c > b && adj[a].count(c)) return fail("nerve triangle " + names[a] + " " + names[b] + " " + names[c]);
    }
  return report;
}

NerveProjection nerve_projection(const Graph& g, const Covering& cov, const PathSeq& p, const std::string& from_part,
                                 const std::string& to_part) {
  validate_path(g, p);
  if (from_part == to_part) throw invalid_argument("start and end parts must differ");
  auto in = [&](Vertex v, const std::string& key) {
    auto keys = cov.parts(v);
    return std::binary_search(keys.begin(), keys.end(), key);
  };
  if (!in(p.front(), from_part)) throw invalid_argument("path does not start in " + from_part);
  if (!in(p.back(), to_part)) throw invalid_argument("path does not end in " + to_part);

  NerveProjection out;
  out.raw.push_back(from_part);
  std::string current = from_part;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (in(p[k + 1], current)) continue;
    auto shared = common(cov.parts(p[k]), cov.parts(p[k + 1]));
    if (shared.size() != 1)
      throw covering_error("edge " + g.label(p[k]) + " -- " + g.label(p[k + 1]) + " lies in " +
                               std::to_string(shared.size()) + " parts, expected exactly one",
                           p[k], p[k + 1]);
    current = shared.front();
    out.raw.push_back(current);
  }
  out.raw.push_back(to_part);

  for (const auto& part : out.raw) {
    auto& r = out.reduced;
    if (!r.empty() && r.back() == part) continue;
    if (r.size() >= 2 && r[r.size() - 2] == part) {
      r.pop_back();
      continue;
    }
    r.push_back(part);
  }
  return out;
}

namespace {

std::string restricted(const WreathSpace& w, const Colouring& c, const VertexSet& region, bool inside) {
  std::string s = "{";
  bool first = true;
  for (const auto& [q, colour] : c) {
    if (contains(region, q) != inside) continue;
    if (!first) s += ',';
    first = false;
    s += w.base().label(q) + ':' + w.lamp().label(colour);
  }
  return s + "}";
}

}  // namespace

std::vector<std::string> io_parts(const WreathSpace& w, Vertex centre, int a1, const LampVertex& v) {
  if (a1 < 1) throw invalid_argument("scale must be at least 1");
  w.validate(v);
  std::vector<std::string> keys;
  const int d = w.base_distance(centre, v.arrow);
  if (d <= 2 * a1) keys.push_back("I" + restricted(w, v.colours, ball(w.base(), centre, 3 * a1), false));
  if (d > a1) keys.push_back("O" + restricted(w, v.colours, ball(w.base(), centre, a1), true));
  std::sort(keys.begin(), keys.end());
  return keys;
}

Covering lamp_io_covering(const WreathSpace& w, const LampWindow& win, Vertex centre, int a1) {
  if (a1 < 1) throw invalid_argument("scale must be at least 1");
  w.base().check_vertex(centre);
  const int rim = rim_distance(w.base(), centre);
  if (rim != kNoRim && rim < 3 * a1)
    throw window_error("base window too small: rim at distance " + std::to_string(rim) + " from the centre");
  const VertexSet inner = ball(w.base(), centre, a1), outer = ball(w.base(), centre, 3 * a1);
  return Covering{"io(" + w.base().label(centre) + "," + std::to_string(a1) + ")", a1,
                  [&w, &win, centre, a1, inner, outer](Vertex id) {
                    const LampVertex& v = win.points.at(static_cast<std::size_t>(id));
                    std::vector<std::string> keys;
                    const int d = w.base_distance(centre, v.arrow);
                    if (d <= 2 * a1) keys.push_back("I" + restricted(w, v.colours, outer, false));
                    if (d > a1) keys.push_back("O" + restricted(w, v.colours, inner, true));
                    std::sort(keys.begin(), keys.end());
                    return keys;
                  }};
}

}  // namespace lamplighter
