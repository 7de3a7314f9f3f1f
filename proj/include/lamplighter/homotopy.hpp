#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lamplighter/graph_core.hpp"
#include "lamplighter/wreath.hpp"

namespace lamplighter {

// Vertex sequence with consecutive entries adjacent.
using PathSeq = std::vector<Vertex>;

void validate_path(const Graph& g, const PathSeq& p);

// Replace p[i..j] by `replacement` (same endpoints).
struct Move {
  std::size_t i = 0;
  std::size_t j = 0;
  PathSeq replacement;
  bool operator==(const Move&) const = default;
};

class move_error : public error {
 public:
  move_error(const std::string& what, Vertex a = -1, Vertex b = -1) : error(what), offending{a, b} {}
  std::pair<Vertex, Vertex> offending;
};

PathSeq elementary_move(const Graph& g, const PathSeq& p, std::size_t i, std::size_t j, const PathSeq& replacement,
                        int scale);
PathSeq replay(const Graph& g, PathSeq p, const std::vector<Move>& script, int scale);

// "i j v,v,...;" per move, vertices by label.
std::string format_script(const Graph& g, const std::vector<Move>& script);

struct SearchCaps {
  std::size_t max_len = 24;  // edges
  std::size_t max_states = 200'000;
};

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct HomotopyResult {
  Verdict verdict = Verdict::unknown;
  std::vector<Move> script;
  std::size_t states = 0;
};

// All single moves out of p at the given scale that keep the length within max_len.
std::vector<Move> enumerate_moves(const Graph& g, const DistanceMatrix& dm, const PathSeq& p, int scale,
                                  std::size_t max_len);

HomotopyResult coarse_homotopic(const Graph& g, const PathSeq& p1, const PathSeq& p2, int scale,
                                const SearchCaps& caps = {});
HomotopyResult is_coarsely_trivial(const Graph& g, const PathSeq& loop, int scale, const SearchCaps& caps = {});

// Search for an equivalent path missing `target`.
struct AvoidResult {
  bool found = false;
  bool closed = false;  // reachable set under max_len exhausted
  std::vector<Move> script;
  PathSeq path;
  std::size_t states = 0;
};
AvoidResult find_avoiding_path(const Graph& g, const PathSeq& p, const VertexSet& target, int scale,
                               const SearchCaps& caps = {});

// Covering of the vertices of a graph; `parts` lists the keys of the parts
// containing a vertex, sorted.
struct Covering {
  std::string name;
  int scale = 1;
  std::function<std::vector<std::string>(Vertex)> parts;
};

Covering explicit_covering(const std::map<std::string, VertexSet>& parts, int scale, const std::string& name = "explicit");
VertexSet part_members(const Graph& g, const Covering& cov, const std::string& key);

struct CoveringReport {
  bool ok = true;
  std::string failure;
  std::size_t part_count = 0;
  std::size_t nerve_edges = 0;
  std::size_t sets_checked = 0;
};

// Small sets (pairs and triples exhaustively, larger sets sampled) of
// diameter <= scale lie in one part, and no three parts pairwise intersect.
CoveringReport verify_covering(const Graph& g, const Covering& cov, std::size_t samples = 2000, unsigned seed = 1);

class covering_error : public error {
 public:
  covering_error(const std::string& what, Vertex a, Vertex b) : error(what), edge{a, b} {}
  std::pair<Vertex, Vertex> edge;
};

struct NerveProjection {
  std::vector<std::string> raw;
  std::vector<std::string> reduced;
};

NerveProjection nerve_projection(const Graph& g, const Covering& cov, const PathSeq& p, const std::string& from_part,
                                 const std::string& to_part);

// Parts of the inner/outer covering around base vertex `centre` at scale a1:
// "I{...}" for arrows within 2*a1, keyed by the colouring outside B(centre, 3*a1);
// "O{...}" for arrows beyond a1, keyed by the colouring on B(centre, a1).
std::vector<std::string> io_parts(const WreathSpace& w, Vertex centre, int a1, const LampVertex& v);
Covering lamp_io_covering(const WreathSpace& w, const LampWindow& win, Vertex centre, int a1);

enum class Persistence { certified, refuted, unknown };
std::string to_string(Persistence p);

struct PersistenceCertificate {
  Persistence verdict = Persistence::unknown;
  std::vector<std::string> nerve_path;
  std::vector<Move> script;
  PathSeq witness;
  int scale = 1;
  SearchCaps caps;
  std::string note;
};

PersistenceCertificate persistent_intersection(const Graph& g, const PathSeq& p, const VertexSet& target, int scale,
                                               const SearchCaps& caps = {}, const Covering* cov = nullptr);

struct StringyWitness {
  Vertex centre = -1;
  std::string part;
  int bound = 0;     // (1 + 4 a1) deg^(2 a1)
  int diameter = 0;  // exact diameter of the inner part
  int gap_from_u = 0;
  int gap_from_v = 0;
};

StringyWitness stringy_witness(const WreathSpace& w, const LampVertex& u, const LampVertex& v, int a1, int a2);

}  // namespace lamplighter
