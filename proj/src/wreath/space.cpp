#include <algorithm>
#include <sstream>

#include "lamplighter/wreath.hpp"

namespace lamplighter {

WreathSpace::WreathSpace(Graph lamp, Vertex basepoint, Graph base)
    : lamp_(std::move(lamp)), basepoint_(basepoint), base_(std::move(base)) {
  lamp_.check_vertex(basepoint_);
  if (base_.vertex_count() == 0) throw invalid_argument("empty base graph");
  require_connected(lamp_, "wreath space lamp graph");
  require_connected(base_, "wreath space base graph");
  lamp_dm_ = DistanceMatrix(lamp_);
  base_dm_ = DistanceMatrix(base_);
}

WreathSpace WreathSpace::lamplighter(int n, Graph base) {
  if (n < 1) throw invalid_argument("lamplighter needs n >= 1");
  WreathSpace w(complete_graph(n), 0, std::move(base));
  w.modulus_ = n;
  return w;
}

int WreathSpace::colour_at(const Colouring& c, Vertex q) const {
  auto it = c.find(q);
  return it == c.end() ? basepoint_ : it->second;
}

Colouring WreathSpace::canonical(Colouring c) const {
  std::erase_if(c, [&](const auto& kv) { return kv.second == basepoint_; });
  return c;
}

void WreathSpace::validate(const LampVertex& v) const {
  base_.check_vertex(v.arrow);
  for (const auto& [q, colour] : v.colours) {
    base_.check_vertex(q);
    lamp_.check_vertex(colour);
    if (colour == basepoint_) throw invalid_argument("colouring stores a basepoint entry");
  }
}

std::string WreathSpace::format(const LampVertex& v) const {
  std::string s = "{";
  bool first = true;
  for (const auto& [q, colour] : v.colours) {
    if (!first) s += ',';
    first = false;
    s += base_.label(q) + ':' + lamp_.label(colour);
  }
  return s + "}@" + base_.label(v.arrow);
}

LampVertex WreathSpace::parse(const std::string& text) const {
  auto open = text.find('{'), close = text.find('}'), at = text.find('@');
  if (open != 0 || close == std::string::npos || at != close + 1)
    throw invalid_argument("expected {v:c,...}@p, got '" + text + "'");
  LampVertex v;
  v.arrow = base_.find(text.substr(at + 1));
  std::istringstream body(text.substr(1, close - 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw invalid_argument("bad colouring entry '" + item + "'");
    Vertex q = base_.find(item.substr(0, colon));
    int colour = lamp_.find(item.substr(colon + 1));
    if (colour != basepoint_) v.colours[q] = colour;
  }
  validate(v);
  return v;
}

std::string WreathSpace::describe() const {
  if (modulus_ > 0) return "L_" + std::to_string(modulus_) + "(" + base_.name + ")";
  return "(" + lamp_.name + "," + lamp_.label(basepoint_) + ") wr " + base_.name;
}

VertexSet colouring_difference(const Colouring& a, const Colouring& b) {
  std::vector<Vertex> out;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back((ia++)->first);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back((ib++)->first);
    } else {
      if (ia->second != ib->second) out.push_back(ia->first);
      ++ia;
      ++ib;
    }
  }
  return out;
}

VertexSet support(const Colouring& c) {
  VertexSet out;
  for (const auto& kv : c) out.push_back(kv.first);
  return out;
}

Colouring add_colourings(int n, const Colouring& a, const Colouring& b) {
  Colouring out = a;
  for (const auto& [q, x] : b) {
    int s = ((out.count(q) ? out[q] : 0) + x) % n;
    if (s == 0)
      out.erase(q);
    else
      out[q] = s;
  }
  return out;
}

Colouring subtract_colourings(int n, const Colouring& a, const Colouring& b) {
  Colouring neg;
  for (const auto& [q, x] : b)
    if (x % n) neg[q] = (n - x % n) % n;
  return add_colourings(n, a, neg);
}

std::vector<LampVertex> neighbors(const WreathSpace& w, const LampVertex& v) {
  w.validate(v);
  std::vector<LampVertex> out;
  for (Vertex q : w.base().neighbors(v.arrow)) out.push_back(LampVertex{v.colours, q});
  const int here = w.colour_at(v.colours, v.arrow);
  for (Vertex colour : w.lamp().neighbors(here)) {
    LampVertex u = v;
    if (colour == w.basepoint())
      u.colours.erase(v.arrow);
    else
      u.colours[v.arrow] = colour;
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Vertex LampWindow::id(const LampVertex& v) const {
  auto it = index.find(v);
  if (it == index.end()) throw unknown_vertex("lamplighter vertex outside the materialized window");
  return it->second;
}

LampWindow materialize(const WreathSpace& w, const VertexSet& support_window, const VertexSet& arrow_window,
                       std::size_t cap) {
  for (Vertex q : support_window) w.base().check_vertex(q);
  for (Vertex q : arrow_window) w.base().check_vertex(q);
  if (arrow_window.empty()) throw invalid_argument("empty arrow window");
  const std::size_t colours = static_cast<std::size_t>(w.lamp_size());
  std::size_t count = arrow_window.size();
  for (std::size_t i = 0; i < support_window.size(); ++i) {
    if (count > cap / colours) throw cap_exceeded("materialization cap " + std::to_string(cap) + " exceeded");
    count *= colours;
  }
  if (count > cap) throw cap_exceeded("materialization cap " + std::to_string(cap) + " exceeded");

  LampWindow out;
  out.points.reserve(count);
  std::vector<int> digits(support_window.size(), 0);
  while (true) {
    Colouring c;
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i] != w.basepoint()) c[support_window[i]] = digits[i];
    for (Vertex p : arrow_window) out.points.push_back(LampVertex{c, p});
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == static_cast<int>(colours)) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  std::sort(out.points.begin(), out.points.end());
  for (const auto& v : out.points) {
    Vertex id = out.graph.add_vertex(w.format(v));
    out.index.emplace(v, id);
  }
  bool truncated = false;
  for (std::size_t id = 0; id < out.points.size(); ++id) {
    const auto& v = out.points[id];
    bool rim = w.base().on_rim(v.arrow) || !contains(support_window, v.arrow);
    for (const auto& u : neighbors(w, v)) {
      auto it = out.index.find(u);
      if (it == out.index.end()) {
        rim = true;
        continue;
      }
      out.graph.add_edge(static_cast<Vertex>(id), it->second);
    }
    if (rim) {
      out.graph.mark_rim(static_cast<Vertex>(id));
      truncated = true;
    }
  }
  out.graph.name = w.describe();
  if (truncated || w.base().is_window()) {
    std::string params = "support=" + std::to_string(support_window.size()) +
                         " arrows=" + std::to_string(arrow_window.size());
    out.graph.set_window("wreath:" + w.describe(), params);
  }
  return out;
}

LampWindow materialize_full(const WreathSpace& w, std::size_t cap) {
  auto all = all_vertices(w.base());
  return materialize(w, all, all, cap);
}

std::vector<Vertex> invert_bijection(const std::vector<Vertex>& f, std::size_t target_size) {
  if (f.size() != target_size) throw invalid_argument("map is not a bijection: size mismatch");
  std::vector<Vertex> inv(target_size, -1);
  for (std::size_t x = 0; x < f.size(); ++x) {
    Vertex y = f[x];
    if (y < 0 || static_cast<std::size_t>(y) >= target_size || inv[y] != -1)
      throw invalid_argument("map is not a bijection");
    inv[y] = static_cast<Vertex>(x);
  }
  return inv;
}

LampMap transport_bilip(const WreathSpace& w1, const WreathSpace& w2, const std::vector<Vertex>& alpha,
                        const std::vector<Vertex>& beta) {
  invert_bijection(alpha, w2.lamp().vertex_count());
  auto beta_inv = invert_bijection(beta, w2.base().vertex_count());
  if (w1.lamp().vertex_count() != alpha.size() || w1.base().vertex_count() != beta.size())
    throw invalid_argument("transport maps do not match the source space");
  return [&w1, &w2, alpha, beta, beta_inv](const LampVertex& v) {
    w1.validate(v);
    LampVertex out;
    out.arrow = beta[v.arrow];
    const bool moves_basepoint = alpha[w1.basepoint()] != w2.basepoint();
    if (moves_basepoint) {
      // Finite bases only: every lamp of the target may change.
      for (std::size_t y = 0; y < beta_inv.size(); ++y) {
        int colour = alpha[w1.colour_at(v.colours, beta_inv[y])];
        if (colour != w2.basepoint()) out.colours[static_cast<Vertex>(y)] = colour;
      }
    } else {
      for (const auto& [q, colour] : v.colours) out.colours[beta[q]] = alpha[colour];
    }
    return out;
  };
}

}  // namespace lamplighter
