#include <algorithm>

#include "lamplighter/homotopy.hpp"
#include "moves_internal.hpp"

namespace lamplighter {

void validate_path(const Graph& g, const PathSeq& p) {
  if (p.empty()) throw invalid_argument("empty path");
  for (Vertex v : p) g.check_vertex(v);
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    if (!g.adjacent(p[k], p[k + 1]))
      throw invalid_argument("path step " + g.label(p[k]) + " -> " + g.label(p[k + 1]) + " is not an edge");
}

PathSeq elementary_move(const Graph& g, const PathSeq& p, std::size_t i, std::size_t j, const PathSeq& replacement,
                        int scale) {
  validate_path(g, p);
  if (i > j || j >= p.size()) throw move_error("subpath indices out of range");
  validate_path(g, replacement);
  if (replacement.front() != p[i] || replacement.back() != p[j])
    throw move_error("replacement endpoints differ from the subpath's", replacement.front(), replacement.back());
  if (std::equal(replacement.begin(), replacement.end(), p.begin() + static_cast<long>(i), p.begin() + static_cast<long>(j) + 1))
    return p;

  VertexSet together(p.begin() + static_cast<long>(i), p.begin() + static_cast<long>(j) + 1);
  together.insert(together.end(), replacement.begin(), replacement.end());
  together = make_set(together);
  for (Vertex a : together) {
    auto d = distances_from(g, a);
    for (Vertex b : together)
      if (b > a && (d[b] == kUnreachable || d[b] > scale))
        throw move_error("diameter bound violated: d(" + g.label(a) + "," + g.label(b) + ")=" +
                             (d[b] == kUnreachable ? std::string("inf") : std::to_string(d[b])) + " > " +
                             std::to_string(scale),
                         a, b);
  }
  return detail::splice(p, i, j, replacement);
}

PathSeq replay(const Graph& g, PathSeq p, const std::vector<Move>& script, int scale) {
  for (const auto& m : script) p = elementary_move(g, p, m.i, m.j, m.replacement, scale);
  return p;
}

std::string format_script(const Graph& g, const std::vector<Move>& script) {
  std::string out;
  for (const auto& m : script) {
    out += std::to_string(m.i) + ' ' + std::to_string(m.j) + ' ';
    for (std::size_t k = 0; k < m.replacement.size(); ++k) {
      if (k) out += ',';
      out += g.label(m.replacement[k]);
    }
    out += ';';
  }
  return out;
}

namespace detail {

PathSeq splice(const PathSeq& p, std::size_t i, std::size_t j, const PathSeq& replacement) {
  PathSeq out(p.begin(), p.begin() + static_cast<long>(i));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), p.begin() + static_cast<long>(j) + 1, p.end());
  return out;
}

const std::vector<Vertex>& BallCache::ball(Vertex v) {
  auto& slot = balls_[v];
  if (!slot) {
    slot.emplace();
    for (std::size_t x = 0; x < dm_.size(); ++x)
      if (dm_(v, static_cast<Vertex>(x)) != kUnreachable && dm_(v, static_cast<Vertex>(x)) <= scale_)
        slot->push_back(static_cast<Vertex>(x));
  }
  return *slot;
}

void for_each_move(BallCache& cache, const PathSeq& p, std::size_t max_len,
                   const std::function<bool(std::size_t, std::size_t, const PathSeq&)>& visit) {
  const DistanceMatrix& dm = cache.metric();
  const int scale = cache.scale();
  const std::size_t len = p.size() - 1;
  auto close = [&](Vertex a, Vertex b) { return dm(a, b) != kUnreachable && dm(a, b) <= scale; };

  struct Slot {
    std::size_t i, j, budget;
    std::vector<Vertex> candidates;
  };
  std::vector<Slot> slots;
  std::size_t longest = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<Vertex> zeta;
    for (std::size_t j = i; j < p.size(); ++j) {
      bool fits = std::all_of(zeta.begin(), zeta.end(), [&](Vertex z) { return close(z, p[j]); });
      if (!fits) break;
      zeta.push_back(p[j]);
      const std::size_t kept = len - (j - i);
      if (kept > max_len) continue;
      Slot slot{i, j, max_len - kept, {}};
      for (Vertex x : cache.ball(p[i]))
        if (std::all_of(zeta.begin(), zeta.end(), [&](Vertex z) { return close(z, x); })) slot.candidates.push_back(x);
      longest = std::max(longest, slot.budget);
      slots.push_back(std::move(slot));
    }
  }

  // Shorter replacements first: walks of exactly `target` edges per round.
  std::vector<char> allowed(dm.size(), 0);
  for (std::size_t target = 0; target <= longest; ++target) {
    for (const Slot& slot : slots) {
      if (target > slot.budget || static_cast<std::size_t>(dm(p[slot.i], p[slot.j])) > target) continue;
      for (Vertex x : slot.candidates) allowed[x] = 1;
      const std::size_t i = slot.i, j = slot.j;
      const Vertex end = p[j];
      PathSeq walk{p[i]};
      bool stop = false;
      std::function<void()> extend = [&] {
        const Vertex cur = walk.back();
        const std::size_t used = walk.size() - 1;
        if (used == target) {
          if (cur != end) return;
          bool same = walk.size() == j - i + 1 && std::equal(walk.begin(), walk.end(), p.begin() + static_cast<long>(i));
          if (!same && !visit(i, j, walk)) stop = true;
          return;
        }
        for (Vertex x : cache.graph().neighbors(cur)) {
          if (!allowed[x]) continue;
          if (static_cast<std::size_t>(dm(x, end)) > target - used - 1) continue;
          if (!std::all_of(walk.begin(), walk.end(), [&](Vertex y) { return close(x, y); })) continue;
          walk.push_back(x);
          extend();
          walk.pop_back();
          if (stop) return;
        }
      };
      extend();
      for (Vertex x : slot.candidates) allowed[x] = 0;
      if (stop) return;
    }
  }
}

}  // namespace detail

std::vector<Move> enumerate_moves(const Graph& g, const DistanceMatrix& dm, const PathSeq& p, int scale,
                                  std::size_t max_len) {
  validate_path(g, p);
  detail::BallCache cache(g, dm, scale);
  std::vector<Move> out;
  detail::for_each_move(cache, p, max_len, [&](std::size_t i, std::size_t j, const PathSeq& xi) {
    out.push_back(Move{i, j, xi});
    return true;
  });
  return out;
}

}  // namespace lamplighter
