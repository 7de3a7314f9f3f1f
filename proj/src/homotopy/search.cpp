#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <tuple>

#include "lamplighter/homotopy.hpp"
#include "moves_internal.hpp"

namespace lamplighter {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "unknown";
  }
}

namespace {

struct Node {
  PathSeq path;
  long parent;
  Move move;
};

struct Outcome {
  std::optional<std::size_t> hit;  // node index satisfying the goal
  std::optional<Move> last;        // closing shortcut move, if any
  bool closed = false;
  std::vector<Node> nodes;
};

// Best-first exploration of the move graph with exact path keys.
Outcome explore(const Graph& g, const DistanceMatrix& dm, const PathSeq& start, int scale, const SearchCaps& caps,
                const std::function<bool(const PathSeq&)>& goal,
                const std::function<std::optional<Move>(const PathSeq&)>& shortcut,
                const std::function<long(const PathSeq&)>& priority) {
  Outcome out;
  std::map<PathSeq, std::size_t> seen;
  using Entry = std::tuple<long, std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::size_t ticket = 0;

  // Goals are recognised on admission so a wide first expansion cannot
  // exhaust the budget before a one-move answer is looked at.
  auto admit = [&](PathSeq path, long parent, Move move) {
    if (seen.count(path)) return false;
    const std::size_t id = out.nodes.size();
    seen.emplace(path, id);
    queue.emplace(priority(path), ticket++, id);
    const bool done = goal(path);
    out.nodes.push_back(Node{std::move(path), parent, std::move(move)});
    if (done) out.hit = id;
    return done;
  };
  if (admit(start, -1, {})) return out;

  detail::BallCache cache(g, dm, scale);
  while (!queue.empty()) {
    const std::size_t id = std::get<2>(queue.top());
    queue.pop();
    const PathSeq current = out.nodes[id].path;
    if (auto m = shortcut(current)) {
      out.hit = id;
      out.last = m;
      return out;
    }
    bool full = false;
    detail::for_each_move(cache, current, caps.max_len, [&](std::size_t i, std::size_t j, const PathSeq& xi) {
      if (seen.size() >= caps.max_states) {
        full = true;
        return false;
      }
      return !admit(detail::splice(current, i, j, xi), static_cast<long>(id), Move{i, j, xi});
    });
    if (full || out.hit) return out;
  }
  out.closed = true;
  return out;
}

std::vector<Move> script_to(const Outcome& o) {
  std::vector<Move> script;
  if (o.last) script.push_back(*o.last);
  for (long at = static_cast<long>(*o.hit); o.nodes[at].parent >= 0; at = o.nodes[at].parent)
    script.push_back(o.nodes[at].move);
  std::reverse(script.begin(), script.end());
  return script;
}

bool within_scale(const DistanceMatrix& dm, const VertexSet& s, int scale) {
  for (Vertex a : s)
    for (Vertex b : s)
      if (dm(a, b) == kUnreachable || dm(a, b) > scale) return false;
  return true;
}

}  // namespace

HomotopyResult coarse_homotopic(const Graph& g, const PathSeq& p1, const PathSeq& p2, int scale,
                                const SearchCaps& caps) {
  validate_path(g, p1);
  validate_path(g, p2);
  if (p1.front() != p2.front() || p1.back() != p2.back()) throw invalid_argument("paths do not share endpoints");
  if (scale < 0) throw invalid_argument("negative scale");
  if (p1 == p2) return {Verdict::yes, {}, 1};
  if (p1.size() - 1 > caps.max_len || p2.size() - 1 > caps.max_len)
    throw invalid_argument("input path longer than max_len");

  DistanceMatrix dm(g);
  const long target_len = static_cast<long>(p2.size());
  auto shortcut = [&](const PathSeq& p) -> std::optional<Move> {
    const std::size_t shortest = std::min(p.size(), p2.size());
    std::size_t prefix = 0;
    while (prefix < shortest && p[prefix] == p2[prefix]) ++prefix;
    std::size_t suffix = 0;
    while (suffix < shortest - prefix + 1 && p[p.size() - 1 - suffix] == p2[p2.size() - 1 - suffix]) ++suffix;
    const std::size_t a = prefix - 1, b1 = p.size() - suffix, b2 = p2.size() - suffix;
    VertexSet both(p.begin() + static_cast<long>(a), p.begin() + static_cast<long>(b1) + 1);
    both.insert(both.end(), p2.begin() + static_cast<long>(a), p2.begin() + static_cast<long>(b2) + 1);
    if (!within_scale(dm, make_set(both), scale)) return std::nullopt;
    return Move{a, b1, PathSeq(p2.begin() + static_cast<long>(a), p2.begin() + static_cast<long>(b2) + 1)};
  };
  auto outcome = explore(
      g, dm, p1, scale, caps, [&](const PathSeq& p) { return p == p2; }, shortcut,
      [&](const PathSeq& p) { return std::labs(static_cast<long>(p.size()) - target_len); });

  HomotopyResult result;
  result.states = outcome.nodes.size();
  if (outcome.hit) {
    result.verdict = Verdict::yes;
    result.script = script_to(outcome);
  } else {
    result.verdict = outcome.closed ? Verdict::no : Verdict::unknown;
  }
  return result;
}

HomotopyResult is_coarsely_trivial(const Graph& g, const PathSeq& loop, int scale, const SearchCaps& caps) {
  validate_path(g, loop);
  if (loop.front() != loop.back()) throw invalid_argument("not a loop");
  return coarse_homotopic(g, loop, PathSeq{loop.front()}, scale, caps);
}

AvoidResult find_avoiding_path(const Graph& g, const PathSeq& p, const VertexSet& target, int scale,
                               const SearchCaps& caps) {
  validate_path(g, p);
  if (p.size() - 1 > caps.max_len) throw invalid_argument("input path longer than max_len");
  DistanceMatrix dm(g);
  auto hits = [&](const PathSeq& q) {
    long n = 0;
    for (Vertex v : q) n += contains(target, v);
    return n;
  };
  auto outcome = explore(
      g, dm, p, scale, caps, [&](const PathSeq& q) { return hits(q) == 0; },
      [](const PathSeq&) -> std::optional<Move> { return std::nullopt; },
      [&](const PathSeq& q) { return hits(q) * 1024 + static_cast<long>(q.size()); });
  AvoidResult result;
  result.states = outcome.nodes.size();
  result.closed = outcome.closed;
  if (outcome.hit) {
    result.found = true;
    result.script = script_to(outcome);
    result.path = outcome.nodes[*outcome.hit].path;
  }
  return result;
}

}  // namespace lamplighter
