#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamplighter/graph_core.hpp"
#include "lamplighter/wreath.hpp"

namespace lamplighter {

// A leaf X(c) is named by its colouring.
using Leaf = Colouring;

// Distance from v to the leaf: free-end TS through the differing lamps plus recolouring.
int dist_to_leaf(const WreathSpace& w, const LampVertex& v, const Leaf& leaf, int cap = kHeldKarpCap);
int leaf_distance(const WreathSpace& w, const Leaf& a, const Leaf& b, int cap = kHeldKarpCap);

// Arrow positions q with dist_to_leaf((c, q), other) <= radius.
VertexSet leaf_region_near(const WreathSpace& w, const Leaf& c, const Leaf& other, int radius);

struct LeafIntersection {
  bool empty = true;
  std::size_t size = 0;
  int diameter = 0;
  long long bound = 0;  // (1 + 4K) deg^(6K), saturating
};

// X(a)^{+K} n X(b)^{+K} over the base window.
LeafIntersection leaf_coarse_intersection(const WreathSpace& w, const Leaf& a, const Leaf& b, int radius);

struct SupportBall {
  Vertex centre = -1;
  int radius = 0;
};

struct SquareReport {
  bool ok = false;
  std::string failure;
  Colouring base, first, second;  // P0 = X(c), P1 = X(c+a), P3 = X(c+b), P2 = X(c+a+b)
  SupportBall first_ball, second_ball;
  int support_gap = 0;
  std::array<int, 4> side{};    // d(P_i, P_{i+1})
  std::array<int, 4> spread{};  // distance inside P_i between its parts near P_{i-1} and P_{i+1}
};

SquareReport detect_square(const WreathSpace& w, const std::array<Leaf, 4>& leaves, int eps, int spread);

struct LadderReport {
  bool ok = false;
  int failed_rung = 0;  // 1-based index i of the square P_i, P_{i+1}, Q_{i+1}, Q_i
  std::string failure;
  Colouring difference;  // Q_i - P_i
  int arrow_distance = 0;
  int bound = 0;  // 6 eta
};

LadderReport ladder_check(const WreathSpace& w, const std::vector<Leaf>& p, const std::vector<Leaf>& q, int eps,
                          int spread, int eta, const LampVertex& u, const LampVertex& v);

// (c, p) -> (alpha(c), beta(p)).  alpha is only trusted on colourings
// supported in alpha_domain.
struct AptolicMap {
  const WreathSpace* source = nullptr;
  const WreathSpace* target = nullptr;
  std::function<Colouring(const Colouring&)> alpha;
  VertexSet alpha_domain;
  std::vector<Vertex> beta;
  std::string name;
};

AptolicMap aptolic_identity(const WreathSpace& w);
// Lamp-wise transport (c -> lamp o c o beta^-1) of transport_bilip.
AptolicMap aptolic_transport(const WreathSpace& w1, const WreathSpace& w2, const std::vector<Vertex>& lamp_map,
                             const std::vector<Vertex>& beta);
Colouring aptolic_alpha(const AptolicMap& m, const Colouring& c);
LampVertex aptolic_apply(const AptolicMap& m, const LampVertex& v);
// second o first
AptolicMap aptolic_compose(const AptolicMap& first, const AptolicMap& second);
// All (c, alpha(c)) with supp(c) inside the domain; cap on the number of rows.
std::vector<std::pair<Colouring, Colouring>> tabulate_alpha(const AptolicMap& m, std::size_t cap = 1 << 16);
bool alpha_injective(const AptolicMap& m, std::size_t cap = 1 << 16);

struct AffineFit {
  int a = 1;          // smallest integer A with additive error <= A
  double b = 0;       // additive error at that A
  double max_ratio = 0;
  double min_ratio = 0;
  std::size_t pairs = 0;
};

// Smallest integer A with B(A) <= A, where B(A) is the largest of
// d' - A d, d / A - d' and 0 over the sample of (d, d') pairs.
AffineFit fit_affine(const std::vector<std::pair<int, int>>& distances);
AffineFit aptolic_qi_fit(const AptolicMap& m, const std::vector<std::pair<LampVertex, LampVertex>>& sample);

struct InclusionReport {
  bool holds = true;
  bool exhaustive = false;
  std::size_t checked = 0;
  Colouring counterexample;
};

InclusionReport alpha_inclusion_test(const AptolicMap& m, const Colouring& c, const VertexSet& s, int radius,
                                     std::size_t budget = 4096, unsigned seed = 1);

struct DivisibilityReport {
  int n = 0, m = 0;
  std::size_t source_exponent = 0;  // |S|
  std::size_t target_exponent = 0;  // |beta(S)^{+K}|
  bool divides = false;
};

DivisibilityReport divisibility_test(const AptolicMap& m, const VertexSet& s, int radius);

}  // namespace lamplighter
