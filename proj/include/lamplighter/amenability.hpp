#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lamplighter/graph_core.hpp"
#include "lamplighter/leaves.hpp"
#include "lamplighter/wreath.hpp"
#include "lamplighter/wreath_group.hpp"

namespace lamplighter {

struct FolnerEntry {
  std::string label;
  std::size_t size = 0;
  std::size_t boundary = 0;
  long long expected = 0;  // closed-form boundary
  bool matches = false;
  double ratio = 0;
  std::string window;
};

struct FolnerCertificate {
  std::vector<FolnerEntry> entries;
  bool exact = true;     // every measured boundary matches its formula
  bool monotone = true;  // ratios non-increasing along the sequence
};

// Boxes [0, n)^d inside the grid window [-1, n]^d.
FolnerCertificate folner_boxes(int dim, const std::vector<int>& sides);

struct WreathFolner {
  std::size_t size = 0;
  std::size_t boundary = 0;
  long long expected_size = 0;     // |B| |A|^|B|
  long long product_formula = 0;   // |B| |dA| + |dB|
  long long general_formula = 0;   // |B| |dA| |A|^(|B|-1) + |dB| |A|^|B|
};

// F = {(c, p) : p in B, c(q) in A on B, c = o off B}, boundary measured by
// enumerating neighbours in the wreath space.
WreathFolner folner_wreath(const WreathSpace& w, const VertexSet& lamp_set, const VertexSet& base_set,
                           std::size_t cap = 200'000);

struct TreeBoundary {
  std::size_t size = 0;
  std::size_t boundary = 0;
  long long bound = 0;  // (d - 2) |V| + 2
  bool holds = false;
};

TreeBoundary tree_subtree_boundary(const Graph& tree, const VertexSet& subtree, int degree);
// Connected set grown from `start` by adding random boundary vertices that are
// at least `margin` away from the rim.
VertexSet random_subtree(const Graph& tree, Vertex start, std::size_t size, int margin, std::mt19937_64& rng);

// Tabulated vertex map between graphs with declared (A, B).
struct QIMap {
  const Graph* source = nullptr;
  const Graph* target = nullptr;
  std::vector<Vertex> image;
  int a = 1;
  double b = 0;
  std::string name;
};

QIMap qi_identity(const Graph& g);
QIMap qi_from_labels(const Graph& source, const Graph& target, const std::function<std::string(const std::string&)>& f,
                     int a, double b, const std::string& name);
// second o first
QIMap qi_compose(const QIMap& first, const QIMap& second);

struct QIFit {
  AffineFit distances;
  int coverage = 0;  // max distance from a target vertex to the image
  int a = 1;
  double b = 0;      // max(distances.b, coverage)
  bool within_declared = false;
};

// All source pairs when `pairs` is empty.
QIFit qi_fit(const QIMap& f, const std::vector<std::pair<Vertex, Vertex>>& pairs = {});
// Throws when the measured coverage exceeds the declared B.
QIFit qi_verify(const QIMap& f, const std::vector<std::pair<Vertex, Vertex>>& pairs = {});

// Nearest preimage witness per target vertex, ties to the smallest vertex id.
// Declared parameters (A, 3AB).
QIMap quasi_inverse(const QIMap& f);
// max over vertices of d(g(f(x)), x) with both maps on the same graph.
int distance_to_identity(const QIMap& f);

std::vector<VertexSet> fibres(const QIMap& f);
int displacement(const QIMap& f);

struct Rational {
  long num = 1;
  long den = 1;
};

struct KappaReport {
  Rational kappa;
  int radius = 1;
  long constant = 1;
  std::size_t sets = 0;
  // Per tested set: |den |f^-1 S| - num |S|| / (den |dS|).
  std::vector<double> residuals;
  double worst = 0;
  std::string worst_set;
  bool pass = true;
};

// Thick family: every radius-R ball with the ball and its boundary inside the
// window, then seeded unions of up to `max_balls` balls, `cap` sets in all.
KappaReport quasi_kappa_check(const QIMap& f, Rational kappa, int radius, long constant, int max_balls = 3,
                              std::size_t cap = 500, unsigned seed = 1);

// Each vertex goes to its neighbour toward the end of the ray, the last ray
// vertex to itself.
QIMap toward_end_map(const Graph& tree, const std::vector<Vertex>& ray);
std::vector<Vertex> tree_ray(const Graph& tree, int length);

struct NonamenableReport {
  int n = 0;
  int displacement = 0;
  std::size_t pairs = 0;
  bool first_inclusion = true;
  bool second_inclusion = true;
  double min_ratio = 0;
  double max_ratio = 0;
  bool within_stated = true;   // [1/(2nC+1), 2C+1]
  bool within_derived = true;  // [1/(2nC+n+1), 2C+2]
  std::string failure;
};

// Source L_{mp}(X), target L_{mp^n}(X).  Colours split as x = u + m v with
// u in Z_m and v in Z_p (resp. v a base-p number of n digits).
AptolicMap aptolic_nonamenable(const WreathSpace& source, const WreathSpace& target, int m, int p, int n,
                               const QIMap& f);
// Random pairs of vertices with at most `lamps` lit lamps each.
NonamenableReport verify_nonamenable(const AptolicMap& map, const QIMap& f, int n, std::size_t pairs, int lamps,
                                     unsigned seed);

struct AmenableInput {
  std::vector<VertexSet> source_pieces;  // each of size b
  std::vector<VertexSet> target_pieces;  // each of size a
  std::vector<int> piece_map;            // source piece -> target piece
  std::vector<Vertex> beta;
  int q = 2, a = 1, b = 1;
  // Bijection of Z_{q^(ab)} fixing 0, on b base-q^a digits -> a base-q^b digits.
  std::function<long(long)> sigma;
};

struct AmenableReport {
  bool sigma_bijective = false;
  bool pieces_ok = false;
  AffineFit beta_fit;
  int hausdorff = 0;
  std::size_t samples = 0;
};

AptolicMap aptolic_amenable(const WreathSpace& source, const WreathSpace& target, const AmenableInput& in);
AmenableReport verify_amenable(const AptolicMap& map, const AmenableInput& in, std::size_t samples, unsigned seed);

// The element with c(0) = n, c(n) = -n and base n in Z wr Z, measured in {a, t}
// and in {a t a^-1 t^-1, t}.
struct DistortionRow {
  int n = 0;
  long standard = -1;
  long commutator = -1;
  double ratio = 0;
};

DistortionRow distortion_row(int n, std::size_t cap);

}  // namespace lamplighter
