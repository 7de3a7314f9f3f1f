#include <algorithm>
#include <random>
#include <set>

#include "lamplighter/leaves.hpp"

namespace lamplighter {

namespace {

void require_spaces(const AptolicMap& m) {
  if (!m.source || !m.target) throw invalid_argument("aptolic map without spaces");
}

int valuation(int prime, int value) {
  int k = 0;
  while (value % prime == 0) {
    value /= prime;
    ++k;
  }
  return k;
}

// Every colouring that agrees with c outside s, visited in odometer order.
template <class Visit>
void for_each_on(const WreathSpace& w, const Colouring& c, const VertexSet& s, Visit visit) {
  std::vector<int> digits(s.size(), 0);
  while (true) {
    Colouring f = c;
    for (std::size_t k = 0; k < s.size(); ++k) f[s[k]] = digits[k];
    if (!visit(w.canonical(std::move(f)))) return;
    std::size_t k = 0;
    while (k < s.size() && ++digits[k] == w.lamp_size()) digits[k++] = 0;
    if (k == s.size()) return;
  }
}

}  // namespace

AptolicMap aptolic_identity(const WreathSpace& w) {
  std::vector<Vertex> beta(w.base().vertex_count());
  for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = static_cast<Vertex>(i);
  return AptolicMap{&w, &w, [](const Colouring& c) { return c; }, all_vertices(w.base()), beta, "identity"};
}

AptolicMap aptolic_transport(const WreathSpace& w1, const WreathSpace& w2, const std::vector<Vertex>& lamp_map,
                             const std::vector<Vertex>& beta) {
  LampMap lift = transport_bilip(w1, w2, lamp_map, beta);
  return AptolicMap{&w1, &w2, [lift](const Colouring& c) { return lift(LampVertex{c, 0}).colours; },
                    all_vertices(w1.base()), beta, "transport"};
}

Colouring aptolic_alpha(const AptolicMap& m, const Colouring& c) {
  require_spaces(m);
  if (!m.alpha) throw invalid_argument("alpha is not tabulated for " + m.name);
  for (const auto& [q, colour] : m.source->canonical(c)) {
    (void)colour;
    if (!contains(m.alpha_domain, q))
      throw invalid_argument("colouring outside the tabulated window at " + m.source->base().label(q));
  }
  return m.target->canonical(m.alpha(m.source->canonical(c)));
}

LampVertex aptolic_apply(const AptolicMap& m, const LampVertex& v) {
  require_spaces(m);
  m.source->validate(v);
  if (m.beta.size() != m.source->base().vertex_count()) throw invalid_argument("beta does not cover the source base");
  return LampVertex{aptolic_alpha(m, v.colours), m.beta[v.arrow]};
}

AptolicMap aptolic_compose(const AptolicMap& first, const AptolicMap& second) {
  require_spaces(first);
  require_spaces(second);
  if (first.target != second.source) throw invalid_argument("composition across different spaces");
  std::vector<Vertex> beta(first.beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = second.beta.at(first.beta[i]);
  return AptolicMap{first.source, second.target,
                    [first, second](const Colouring& c) { return aptolic_alpha(second, aptolic_alpha(first, c)); },
                    first.alpha_domain, beta, second.name + "*" + first.name};
}

std::vector<std::pair<Colouring, Colouring>> tabulate_alpha(const AptolicMap& m, std::size_t cap) {
  require_spaces(m);
  double rows = 1;
  for (std::size_t k = 0; k < m.alpha_domain.size(); ++k) rows *= m.source->lamp_size();
  if (rows > static_cast<double>(cap)) throw cap_exceeded("alpha table would have more than " + std::to_string(cap) + " rows");
  std::vector<std::pair<Colouring, Colouring>> table;
  for_each_on(*m.source, {}, m.alpha_domain, [&](const Colouring& c) {
    table.emplace_back(c, aptolic_alpha(m, c));
    return true;
  });
  return table;
}

bool alpha_injective(const AptolicMap& m, std::size_t cap) {
  std::set<Colouring> images;
  for (auto& [c, image] : tabulate_alpha(m, cap))
    if (!images.insert(image).second) return false;
  return true;
}

AffineFit fit_affine(const std::vector<std::pair<int, int>>& distances) {
  AffineFit fit;
  fit.pairs = distances.size();
  int ceiling = 1;
  bool first = true;
  for (auto [d, e] : distances) {
    ceiling = std::max({ceiling, d, e});
    if (d == 0) continue;
    const double ratio = static_cast<double>(e) / d;
    fit.max_ratio = first ? ratio : std::max(fit.max_ratio, ratio);
    fit.min_ratio = first ? ratio : std::min(fit.min_ratio, ratio);
    first = false;
  }
  for (int a = 1; a <= ceiling + 1; ++a) {
    double b = 0;
    for (auto [d, e] : distances)
      b = std::max({b, static_cast<double>(e) - static_cast<double>(a) * d, static_cast<double>(d) / a - e});
    if (b <= a) {
      fit.a = a;
      fit.b = b;
      return fit;
    }
  }
  throw error("affine fit did not terminate");
}

AffineFit aptolic_qi_fit(const AptolicMap& m, const std::vector<std::pair<LampVertex, LampVertex>>& sample) {
  std::vector<std::pair<int, int>> distances;
  for (const auto& [x, y] : sample)
    distances.emplace_back(lamp_distance(*m.source, x, y),
                           lamp_distance(*m.target, aptolic_apply(m, x), aptolic_apply(m, y)));
  return fit_affine(distances);
}

InclusionReport alpha_inclusion_test(const AptolicMap& m, const Colouring& c, const VertexSet& s, int radius,
                                     std::size_t budget, unsigned seed) {
  require_spaces(m);
  VertexSet image;
  for (Vertex q : s) image.push_back(m.beta.at(q));
  const VertexSet allowed = thicken(m.target->base(), make_set(image), radius);
  const Colouring base = aptolic_alpha(m, c);

  InclusionReport r;
  auto check = [&](const Colouring& f) {
    ++r.checked;
    const VertexSet moved = colouring_difference(aptolic_alpha(m, f), base);
    if (!set_difference(moved, allowed).empty()) {
      r.holds = false;
      r.counterexample = f;
      return false;
    }
    return true;
  };

  double total = 1;
  for (std::size_t k = 0; k < s.size(); ++k) total *= m.source->lamp_size();
  if (total <= static_cast<double>(budget)) {
    r.exhaustive = true;
    for_each_on(*m.source, m.source->canonical(c), s, check);
    return r;
  }
  std::mt19937 rng(seed);
  for (std::size_t k = 0; k < budget; ++k) {
    Colouring f = m.source->canonical(c);
    for (Vertex q : s) f[q] = static_cast<int>(rng() % m.source->lamp_size());
    if (!check(m.source->canonical(std::move(f)))) break;
  }
  return r;
}

DivisibilityReport divisibility_test(const AptolicMap& m, const VertexSet& s, int radius) {
  require_spaces(m);
  if (radius < 0) throw invalid_argument("negative thickening");
  DivisibilityReport r;
  r.n = m.source->lamp_size();
  r.m = m.target->lamp_size();
  VertexSet image;
  for (Vertex q : s) {
    m.source->base().check_vertex(q);
    const Vertex b = m.beta.at(q);
    const int rim = rim_distance(m.target->base(), b);
    if (rim != kNoRim && rim < radius)
      throw window_error("thickening of beta(S) leaves the target window at " + m.target->base().label(b));
    image.push_back(b);
  }
  r.source_exponent = s.size();
  r.target_exponent = thicken(m.target->base(), make_set(image), radius).size();
  r.divides = true;
  int rest = r.n;
  for (int prime = 2; rest > 1; ++prime) {
    if (rest % prime) continue;
    const int vn = valuation(prime, r.n), vm = valuation(prime, r.m);
    while (rest % prime == 0) rest /= prime;
    if (static_cast<std::size_t>(vn) * r.source_exponent > static_cast<std::size_t>(vm) * r.target_exponent)
      r.divides = false;
  }
  return r;
}

}  // namespace lamplighter
