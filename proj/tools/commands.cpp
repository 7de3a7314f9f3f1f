#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>

#include "lamplighter/amenability.hpp"
#include "lamplighter/homotopy.hpp"

namespace lampctl {

using namespace lamplighter;

namespace {

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int int_or(const JobConfig& cfg, const std::string& key, int fallback) {
  return cfg.has(key) ? static_cast<int>(cfg.get_int(key)) : fallback;
}

// The materialized graph named by the "graph" key, plus the wreath space when
// the name is lamplighter-N-family.
struct GraphSpec {
  std::unique_ptr<WreathSpace> space;
  std::unique_ptr<LampWindow> window;
  Graph plain;
  const Graph& graph() const { return window ? window->graph : plain; }
};

GraphSpec make_graph(const JobConfig& cfg) {
  const std::string spec = cfg.get("graph");
  const int radius = static_cast<int>(cfg.get_int("radius"));
  GraphSpec out;
  if (spec.rfind("lamplighter-", 0) == 0) {
    const auto dash = spec.find('-', 12);
    if (dash == std::string::npos) throw usage_error("graph name lamplighter-N-family expected, got " + spec);
    const int n = std::stoi(spec.substr(12, dash - 12));
    out.space = std::make_unique<WreathSpace>(WreathSpace::lamplighter(n, build_family(spec.substr(dash + 1), radius)));
    out.window = std::make_unique<LampWindow>(materialize_full(*out.space));
  } else if (spec.rfind("dl-", 0) == 0) {
    out.plain = dl_graph(std::stoi(spec.substr(3)), radius);
  } else {
    out.plain = build_family(spec, radius);
  }
  return out;
}

std::vector<Vertex> labels_to_vertices(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<Vertex> out;
  for (const auto& l : labels) out.push_back(g.find(l));
  return out;
}

WreathSpace make_space(const JobConfig& cfg) {
  return WreathSpace::lamplighter(static_cast<int>(cfg.get_int("n")),
                                  build_family(cfg.get("base"), static_cast<int>(cfg.get_int("radius"))));
}

Colouring parse_colouring(const WreathSpace& w, const std::string& text) {
  return w.parse(text + "@" + w.base().label(0)).colours;
}

std::string format_colouring(const WreathSpace& w, const Colouring& c) {
  std::string s = w.format(LampVertex{c, 0});
  return s.substr(0, s.rfind('@'));
}

SearchCaps caps_of(const JobConfig& cfg) {
  return SearchCaps{static_cast<std::size_t>(cfg.get_int("cap_len")), static_cast<std::size_t>(cfg.get_int("cap_states"))};
}

Rational parse_rational(const std::string& text) {
  Rational r;
  const auto slash = text.find('/');
  try {
    r.num = std::stol(text.substr(0, slash));
    r.den = slash == std::string::npos ? 1 : std::stol(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw usage_error("kappa must look like p/q, got '" + text + "'");
  }
  return r;
}

int cmd_build(const JobConfig& cfg, Report& rep, const RunOptions& opt) {
  const std::string kind = cfg.args.empty() ? "lamplighter" : cfg.args[0];
  const int radius = static_cast<int>(cfg.get_int("radius"));
  Graph g;
  int status = kPass;
  if (kind == "lamplighter") {
    auto w = make_space(cfg);
    g = materialize_full(w).graph;
    const std::size_t base = w.base().vertex_count();
    double expected = static_cast<double>(base);
    for (std::size_t k = 0; k < base; ++k) expected *= w.lamp_size();
    rep.line("space", w.describe());
    rep.line("expected vertices", num(expected));
    const std::string b = cfg.get("base");
    const int n = static_cast<int>(cfg.get_int("n"));
    if (n == 2 && b == "complete-3") {
      const bool iso = isomorphic(g, corner_cut_cube()).isomorphic;
      rep.line("truncated-cube isomorphism", iso ? "PASS" : "FAIL");
      if (!iso) status = kFail;
    }
    if (n == 2 && b == "complete-2") {
      const bool iso = isomorphic(g, cycle_graph(8)).isomorphic;
      rep.line("C8 isomorphism", iso ? "PASS" : "FAIL");
      if (!iso) status = kFail;
    }
  } else if (kind == "graph") {
    g = build_family(cfg.get("base"), radius);
  } else if (kind == "dl") {
    g = dl_graph(static_cast<int>(cfg.get_int("n")), radius);
  } else {
    throw usage_error("build expects lamplighter, graph or dl, got '" + kind + "'");
  }
  int lo = 1 << 30, hi = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    lo = std::min(lo, g.degree(static_cast<Vertex>(v)));
    hi = std::max(hi, g.degree(static_cast<Vertex>(v)));
  }
  rep.line("vertices", std::to_string(g.vertex_count()));
  rep.line("edges", std::to_string(g.edge_count()));
  rep.line("degree range", std::to_string(lo) + ".." + std::to_string(hi));
  rep.line("connected", yes_no(is_connected(g)));
  rep.trailer("vertices", std::to_string(g.vertex_count()));
  rep.trailer("edges", std::to_string(g.edge_count()));
  if (!opt.dot_path.empty()) {
    std::ofstream dot(opt.dot_path);
    if (!dot) throw usage_error("cannot write " + opt.dot_path);
    write_dot(dot, g);
    rep.line("dot", opt.dot_path);
  }
  return status;
}

int cmd_dist(const JobConfig& cfg, Report& rep) {
  auto w = make_space(cfg);
  const int cap = static_cast<int>(cfg.get_int("cap_heldkarp"));
  const LampVertex u = w.parse(cfg.get("from")), v = w.parse(cfg.get("to"));
  const int d = lamp_distance(w, u, v, cap);
  rep.line("distance", std::to_string(d));
  std::string path;
  for (const auto& x : lamp_geodesic(w, u, v, cap)) path += (path.empty() ? "" : " ") + w.format(x);
  rep.line("geodesic", path);
  rep.trailer("distance", std::to_string(d));
  return kPass;
}

int verdict_status(Verdict v) { return v == Verdict::yes ? kPass : v == Verdict::no ? kFail : kInconclusive; }

int cmd_homotopy(const JobConfig& cfg, Report& rep) {
  auto spec = make_graph(cfg);
  const Graph& g = spec.graph();
  const auto p1 = labels_to_vertices(g, cfg.get_list("path"));
  if (p1.empty()) throw usage_error("homotopy needs path=v/v/...");
  const int scale = static_cast<int>(cfg.get_int("scale"));
  HomotopyResult r = cfg.get("path2").empty()
                         ? is_coarsely_trivial(g, p1, scale, caps_of(cfg))
                         : coarse_homotopic(g, p1, labels_to_vertices(g, cfg.get_list("path2")), scale, caps_of(cfg));
  rep.line("question", cfg.get("path2").empty() ? "coarsely trivial" : "coarsely homotopic");
  rep.line("verdict", to_string(r.verdict));
  rep.line("states", std::to_string(r.states));
  if (r.verdict == Verdict::yes) rep.line("script", format_script(g, r.script));
  rep.trailer("verdict", to_string(r.verdict));
  return verdict_status(r.verdict);
}

int cmd_persist(const JobConfig& cfg, Report& rep) {
  auto spec = make_graph(cfg);
  const Graph& g = spec.graph();
  const auto p = labels_to_vertices(g, cfg.get_list("path"));
  const auto target = make_set(labels_to_vertices(g, cfg.get_list("target")));
  if (p.empty() || target.empty()) throw usage_error("persist needs path=... and target=...");
  std::unique_ptr<Covering> cov;
  if (spec.space && !cfg.get("centre").empty())
    cov = std::make_unique<Covering>(lamp_io_covering(*spec.space, *spec.window, spec.space->base().find(cfg.get("centre")),
                                                      static_cast<int>(cfg.get_int("a1"))));
  auto cert = persistent_intersection(g, p, target, static_cast<int>(cfg.get_int("scale")), caps_of(cfg), cov.get());
  rep.line("verdict", to_string(cert.verdict));
  if (!cert.nerve_path.empty()) {
    std::string nerve;
    for (const auto& s : cert.nerve_path) nerve += (nerve.empty() ? "" : " ") + s;
    rep.line("nerve path", nerve);
  }
  if (!cert.script.empty()) rep.line("script", format_script(g, cert.script));
  if (!cert.note.empty()) rep.line("note", cert.note);
  rep.trailer("verdict", to_string(cert.verdict));
  return cert.verdict == Persistence::certified ? kPass : cert.verdict == Persistence::refuted ? kFail : kInconclusive;
}

int cmd_leaves(const JobConfig& cfg, Report& rep) {
  auto w = make_space(cfg);
  const int eps = static_cast<int>(cfg.get_int("eps")), spread = static_cast<int>(cfg.get_int("spread"));
  std::vector<Colouring> leaves;
  for (const auto& text : cfg.get_list("leaves")) leaves.push_back(parse_colouring(w, text));
  const std::string mode = cfg.get("mode").empty() ? "square" : cfg.get("mode");
  if (mode == "square") {
    if (leaves.size() != 4) throw usage_error("square needs leaves=c0/c1/c2/c3");
    auto sq = detect_square(w, {leaves[0], leaves[1], leaves[2], leaves[3]}, eps, spread);
    rep.line("square", sq.ok ? "yes" : "no");
    if (!sq.ok) rep.line("failure", sq.failure);
    if (sq.ok) {
      rep.line("base", format_colouring(w, sq.base));
      rep.line("first", format_colouring(w, sq.first));
      rep.line("second", format_colouring(w, sq.second));
      rep.line("support gap", std::to_string(sq.support_gap));
    }
    rep.trailer("square", yes_no(sq.ok));
    return sq.ok ? kPass : kFail;
  }
  if (mode == "ladder") {
    std::vector<Colouring> rungs;
    for (const auto& text : cfg.get_list("rungs")) rungs.push_back(parse_colouring(w, text));
    auto r = ladder_check(w, leaves, rungs, eps, spread, static_cast<int>(cfg.get_int("eta")), w.parse(cfg.get("from")),
                          w.parse(cfg.get("to")));
    rep.line("ladder", r.ok ? "yes" : "no");
    if (!r.ok) {
      rep.line("failed rung", std::to_string(r.failed_rung));
      rep.line("failure", r.failure);
    } else {
      rep.line("difference", format_colouring(w, r.difference));
      rep.line("arrow distance", std::to_string(r.arrow_distance) + " <= " + std::to_string(r.bound));
    }
    rep.trailer("ladder", yes_no(r.ok));
    return r.ok ? kPass : kFail;
  }
  throw usage_error("leaves mode must be square or ladder");
}

int cmd_folner(const JobConfig& cfg, Report& rep) {
  const std::string mode = cfg.get("mode").empty() ? "boxes" : cfg.get("mode");
  if (mode == "boxes") {
    std::vector<int> sides;
    for (long s : cfg.get_int_list("sides")) sides.push_back(static_cast<int>(s));
    auto cert = folner_boxes(static_cast<int>(cfg.get_int("dim")), sides);
    for (const auto& e : cert.entries)
      rep.line(e.label, "|F|=" + std::to_string(e.size) + " |dF|=" + std::to_string(e.boundary) +
                            " formula=" + std::to_string(e.expected) + " ratio=" + num(e.ratio));
    rep.line("exact", yes_no(cert.exact));
    rep.line("monotone", yes_no(cert.monotone));
    rep.trailer("exact", yes_no(cert.exact));
    return cert.exact ? kPass : kFail;
  }
  if (mode == "wreath") {
    const int radius = static_cast<int>(cfg.get_int("radius"));
    Graph lamp = line_window(-radius, radius);
    WreathSpace w(lamp, lamp.find("0"), line_window(-radius, radius));
    VertexSet a, b;
    for (int x = 0; x < cfg.get_int("lamp_width"); ++x) a.push_back(w.lamp().find(std::to_string(x)));
    for (int x = 0; x < cfg.get_int("base_width"); ++x) b.push_back(w.base().find(std::to_string(x)));
    auto r = folner_wreath(w, a, b, static_cast<std::size_t>(cfg.get_int("cap_states")));
    rep.line("|F|", std::to_string(r.size) + " (expected " + std::to_string(r.expected_size) + ")");
    rep.line("|dF|", std::to_string(r.boundary));
    rep.line("|B||dA| + |dB|", std::to_string(r.product_formula));
    rep.line("|B||dA||A|^(|B|-1) + |dB||A|^|B|", std::to_string(r.general_formula));
    const bool ok = static_cast<long long>(r.boundary) == r.general_formula &&
                    static_cast<long long>(r.size) == r.expected_size;
    rep.trailer("boundary", std::to_string(r.boundary));
    return ok ? kPass : kFail;
  }
  if (mode == "tree") {
    const int degree = static_cast<int>(cfg.get_int("degree"));
    Graph tree = tree_window(degree, static_cast<int>(cfg.get_int("radius")));
    std::mt19937_64 rng(static_cast<unsigned long>(cfg.get_int("seed")));
    const long samples = cfg.get_int("samples");
    long holds = 0;
    for (long k = 0; k < samples; ++k) {
      auto s = random_subtree(tree, tree.find("r"), 1 + rng() % 25, 1, rng);
      holds += tree_subtree_boundary(tree, s, degree).holds;
    }
    rep.line("subtrees", std::to_string(samples));
    rep.line("bound holds", std::to_string(holds));
    rep.trailer("holds", std::to_string(holds));
    return holds == samples ? kPass : kFail;
  }
  throw usage_error("folner mode must be boxes, wreath or tree");
}

int cmd_kappa(const JobConfig& cfg, Report& rep) {
  const int radius = static_cast<int>(cfg.get_int("radius"));
  const std::string kind = cfg.get("map");
  Graph target = line_window(-radius, radius);
  Graph source;
  std::function<int(int)> f;
  if (kind == "identity") {
    source = target;
    f = [](int k) { return k; };
  } else if (kind == "double") {
    source = line_window(-radius / 2, radius / 2);
    f = [](int k) { return 2 * k; };
  } else {
    throw usage_error("kappa map must be identity or double");
  }
  auto m = qi_from_labels(source, target, [&](const std::string& s) { return std::to_string(f(std::stoi(s))); }, 2, 1, kind);
  auto r = quasi_kappa_check(m, parse_rational(cfg.get("kappa")), static_cast<int>(cfg.get_int("r")),
                             cfg.get_int("constant"), static_cast<int>(cfg.get_int("balls")),
                             static_cast<std::size_t>(cfg.get_int("sets")), static_cast<unsigned>(cfg.get_int("seed")));
  rep.line("sets tested", std::to_string(r.sets));
  rep.line("worst residual/|dS|", num(r.worst) + " at " + r.worst_set);
  rep.line("verdict", r.pass ? "pass" : "fail");
  rep.trailer("pass", yes_no(r.pass));
  return r.pass ? kPass : kFail;
}

int cmd_aptolic(const JobConfig& cfg, Report& rep) {
  const std::string variant = cfg.get("variant");
  if (variant == "nonamenable") {
    const int degree = int_or(cfg, "degree", 4), radius = int_or(cfg, "radius", 4);
    const int m = static_cast<int>(cfg.get_int("m")), p = static_cast<int>(cfg.get_int("p")), n = degree - 1;
    Graph tree = tree_window(degree, radius);
    auto f = toward_end_map(tree, tree_ray(tree, radius));
    long target_colours = m;
    for (int k = 0; k < n; ++k) target_colours *= p;
    auto source = WreathSpace::lamplighter(m * p, tree);
    auto target = WreathSpace::lamplighter(static_cast<int>(target_colours), tree);
    auto phi = aptolic_nonamenable(source, target, m, p, n, f);
    auto r = verify_nonamenable(phi, f, n, static_cast<std::size_t>(cfg.get_int("pairs")),
                                static_cast<int>(cfg.get_int("lamps")), static_cast<unsigned>(cfg.get_int("seed")));
    rep.line("map", "L_" + std::to_string(m * p) + " -> L_" + std::to_string(target_colours) + " over T_" +
                        std::to_string(degree) + " radius " + std::to_string(radius));
    rep.line("displacement C", std::to_string(r.displacement));
    rep.line("pairs", std::to_string(r.pairs));
    rep.line("first inclusion", yes_no(r.first_inclusion));
    rep.line("second inclusion", yes_no(r.second_inclusion));
    rep.line("ratio range", num(r.min_ratio) + " .. " + num(r.max_ratio));
    const double c = r.displacement;
    rep.line("within [1/(2nC+1), 2C+1]", yes_no(r.within_stated) + " [" + num(1 / (2 * n * c + 1)) + ", " + num(2 * c + 1) + "]");
    rep.line("within [1/(2nC+n+1), 2C+2]",
             yes_no(r.within_derived) + " [" + num(1 / (2 * n * c + n + 1)) + ", " + num(2 * c + 2) + "]");
    if (!r.failure.empty()) rep.line("failure", r.failure);
    rep.trailer("inclusions", yes_no(r.first_inclusion && r.second_inclusion));
    rep.trailer("within_stated", yes_no(r.within_stated));
    return r.first_inclusion && r.second_inclusion && r.within_stated ? kPass : kFail;
  }
  if (variant == "amenable") {
    const int radius = int_or(cfg, "radius", 10);
    Graph x = line_window(-2 * radius, 2 * radius - 1), y = line_window(-radius, radius - 1);
    auto source = WreathSpace::lamplighter(2, x), target = WreathSpace::lamplighter(4, y);
    AmenableInput in;
    in.q = 2;
    in.a = 1;
    in.b = 2;
    for (int k = -radius; k < radius; ++k) {
      in.source_pieces.push_back({x.find(std::to_string(2 * k)), x.find(std::to_string(2 * k + 1))});
      in.target_pieces.push_back({y.find(std::to_string(k))});
      in.piece_map.push_back(k + radius);
    }
    for (int k = -2 * radius; k < 2 * radius; ++k)
      in.beta.push_back(y.find(std::to_string(k >= 0 ? k / 2 : -((-k + 1) / 2))));
    auto map = aptolic_amenable(source, target, in);
    auto r = verify_amenable(map, in, static_cast<std::size_t>(cfg.get_int("samples")),
                             static_cast<unsigned>(cfg.get_int("seed")));
    rep.line("map", "L_2(pairs) -> L_4(points)");
    rep.line("sigma bijective", yes_no(r.sigma_bijective));
    rep.line("beta fit", "(" + std::to_string(r.beta_fit.a) + "," + num(r.beta_fit.b) + ")");
    rep.line("hausdorff", std::to_string(r.hausdorff) + " over " + std::to_string(r.samples) + " samples");
    rep.trailer("hausdorff", std::to_string(r.hausdorff));
    return r.sigma_bijective && r.hausdorff <= 2 ? kPass : kFail;
  }
  throw usage_error("aptolic variant must be nonamenable or amenable");
}

int cmd_distortion(const JobConfig& cfg, Report& rep) {
  const auto cap = static_cast<std::size_t>(cfg.get_int("cap_states"));
  double previous = 0;
  bool monotone = true, complete = true;
  for (int n = 1; n <= cfg.get_int("nmax"); ++n) {
    auto row = distortion_row(n, cap);
    complete = complete && row.standard > 0 && row.commutator > 0;
    if (row.ratio < previous) monotone = false;
    previous = row.ratio;
    rep.line("n=" + std::to_string(n), "|x|_{a,t}=" + std::to_string(row.standard) +
                                           " |x|_{[a,t],t}=" + std::to_string(row.commutator) + " ratio=" + num(row.ratio));
  }
  rep.line("ratio non-decreasing", yes_no(monotone));
  rep.trailer("monotone", yes_no(monotone));
  rep.trailer("complete", yes_no(complete));
  if (!complete) return kInconclusive;
  return monotone ? kPass : kFail;
}

int cmd_ends(const JobConfig& cfg, Report& rep) {
  auto spec = make_graph(cfg);
  const Graph& g = spec.graph();
  Vertex centre = 0;
  if (!cfg.get("centre").empty()) {
    centre = g.find(cfg.get("centre"));
  } else {
    int best = -1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (int d = rim_distance(g, static_cast<Vertex>(v)); d > best) {
        best = d;
        centre = static_cast<Vertex>(v);
      }
  }
  std::vector<int> radii;
  for (long r : cfg.get_int_list("radii")) radii.push_back(static_cast<int>(r));
  auto rows = ends_profile(g, centre, radii, static_cast<int>(cfg.get_int("margin")), false);
  bool ok = true;
  for (const auto& row : rows) {
    rep.line("r=" + std::to_string(row.radius), "components=" + std::to_string(row.components) +
                                                    " deep=" + std::to_string(row.deep_components) +
                                                    (row.window_ok ? "" : " (window too small)"));
    ok = ok && row.window_ok;
  }
  rep.line("centre", g.label(centre));
  return ok ? kPass : kInconclusive;
}

int cmd_fixtures(Report& rep) {
  int failed = 0;
  for (const auto& f : run_fixtures()) {
    rep.line(f.name, std::string(f.pass ? "PASS" : "FAIL") + " (" + f.detail + ")");
    failed += !f.pass;
  }
  rep.trailer("failed", std::to_string(failed));
  return failed ? kFail : kPass;
}

}  // namespace

std::string Report::render(const JobConfig& cfg, int status) const {
  std::ostringstream out;
  out << "lampctl report\n\n[config]\n" << cfg.dump() << "\n[result]\n";
  for (const auto& [k, v] : body_) out << k << ": " << v << "\n";
  out << "\n[trailer]\n";
  for (const auto& [k, v] : trailer_) out << k << "=" << v << "\n";
  out << "status=" << status << "\n";
  return out.str();
}

int run(const JobConfig& cfg, std::ostream& out, const RunOptions& options) {
  Report rep;
  int status = kUsage;
  try {
    const std::string& c = cfg.command;
    if (c == "build") status = cmd_build(cfg, rep, options);
    else if (c == "dist") status = cmd_dist(cfg, rep);
    else if (c == "homotopy") status = cmd_homotopy(cfg, rep);
    else if (c == "persist") status = cmd_persist(cfg, rep);
    else if (c == "leaves") status = cmd_leaves(cfg, rep);
    else if (c == "folner") status = cmd_folner(cfg, rep);
    else if (c == "kappa") status = cmd_kappa(cfg, rep);
    else if (c == "aptolic") status = cmd_aptolic(cfg, rep);
    else if (c == "distortion") status = cmd_distortion(cfg, rep);
    else if (c == "ends") status = cmd_ends(cfg, rep);
    else if (c == "fixtures") status = cmd_fixtures(rep);
    else throw usage_error("unknown command '" + c + "'");
  } catch (const usage_error& e) {
    rep.line("error", e.what());
    status = kUsage;
  } catch (const lamplighter::invalid_argument& e) {
    rep.line("error", e.what());
    status = kUsage;
  } catch (const unknown_vertex& e) {
    rep.line("error", e.what());
    status = kUsage;
  } catch (const window_error& e) {
    rep.line("inconclusive", e.what());
    status = kInconclusive;
  } catch (const cap_exceeded& e) {
    rep.line("inconclusive", e.what());
    status = kInconclusive;
  } catch (const lamplighter::error& e) {
    rep.line("error", e.what());
    status = kFail;
  }
  out << rep.render(cfg, status);
  return status;
}

}  // namespace lampctl
