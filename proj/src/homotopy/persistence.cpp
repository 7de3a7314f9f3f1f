#include <algorithm>

#include "lamplighter/homotopy.hpp"

namespace lamplighter {

std::string to_string(Persistence p) {
  switch (p) {
    case Persistence::certified:
      return "certified-persistent";
    case Persistence::refuted:
      return "refuted";
    default:
      return "unknown";
  }
}

PersistenceCertificate persistent_intersection(const Graph& g, const PathSeq& p, const VertexSet& target, int scale,
                                               const SearchCaps& caps, const Covering* cov) {
  validate_path(g, p);
  PersistenceCertificate cert;
  cert.scale = scale;
  cert.caps = caps;

  if (contains(target, p.front()) || contains(target, p.back())) {
    cert.verdict = Persistence::certified;
    cert.note = "target contains an endpoint";
    return cert;
  }
  if (std::none_of(p.begin(), p.end(), [&](Vertex v) { return contains(target, v); })) {
    cert.verdict = Persistence::refuted;
    cert.witness = p;
    cert.note = "path misses the target";
    return cert;
  }

  if (cov) {
    if (scale > cov->scale) {
      cert.note = "covering scale below the requested scale; search only";
    } else if (auto report = verify_covering(g, *cov); !report.ok) {
      cert.note = "covering hypotheses fail (" + report.failure + "); search only";
    } else {
      try {
        for (const auto& a : cov->parts(p.front()))
          for (const auto& b : cov->parts(p.back())) {
            if (a == b) continue;
            auto proj = nerve_projection(g, *cov, p, a, b);
            for (const auto& node : proj.reduced) {
              auto members = part_members(g, *cov, node);
              if (!members.empty() && set_difference(members, target).empty()) {
                cert.verdict = Persistence::certified;
                cert.nerve_path = proj.reduced;
                cert.note = "target contains nerve node " + node;
                return cert;
              }
            }
          }
        cert.note = "no reduced nerve node inside the target; search only";
      } catch (const covering_error& e) {
        cert.note = std::string("nerve projection failed (") + e.what() + "); search only";
      }
    }
  }

  auto search = find_avoiding_path(g, p, target, scale, caps);
  if (search.found) {
    cert.verdict = Persistence::refuted;
    cert.script = search.script;
    cert.witness = search.path;
    return cert;
  }
  cert.verdict = Persistence::unknown;
  if (!cert.note.empty()) cert.note += "; ";
  cert.note += search.closed ? "no avoiding path within max_len (closed)" : "search budget exhausted";
  return cert;
}

StringyWitness stringy_witness(const WreathSpace& w, const LampVertex& u, const LampVertex& v, int a1, int a2) {
  if (a1 < 1 || a2 < 0) throw invalid_argument("scales must satisfy a1 >= 1, a2 >= 0");
  w.validate(u);
  w.validate(v);
  const VertexSet diff = colouring_difference(u.colours, v.colours);
  if (diff.empty()) throw invalid_argument("near common leaf: the colourings agree");
  const int reach = 2 * a1 + a2;
  StringyWitness out;
  for (Vertex q : diff)
    if (w.base_distance(q, u.arrow) >= reach && w.base_distance(q, v.arrow) >= reach) {
      out.centre = q;
      break;
    }
  if (out.centre < 0)
    throw invalid_argument("near common leaf: every differing lamp lies within " + std::to_string(reach) +
                           " of an arrow");
  const int rim = rim_distance(w.base(), out.centre);
  if (rim != kNoRim && rim < 3 * a1) throw window_error("base window too small around the witness");

  out.part = io_parts(w, out.centre, a1, LampVertex{u.colours, out.centre}).front();
  int power = 1;
  for (int k = 0; k < 2 * a1; ++k) power *= w.base().max_degree();
  out.bound = (1 + 4 * a1) * power;

  const VertexSet outer = ball(w.base(), out.centre, 3 * a1), arrows = ball(w.base(), out.centre, 2 * a1);
  int lamp_diameter = 0;
  for (int a = 0; a < w.lamp_size(); ++a)
    for (int b = 0; b < w.lamp_size(); ++b) lamp_diameter = std::max(lamp_diameter, w.colour_distance(a, b));
  for (Vertex q1 : arrows)
    for (Vertex q2 : arrows)
      out.diameter = std::max(out.diameter, ts_path(w, q1, outer, q2).length +
                                                static_cast<int>(outer.size()) * lamp_diameter);
  out.gap_from_u = w.base_distance(out.centre, u.arrow) - 2 * a1;
  out.gap_from_v = w.base_distance(out.centre, v.arrow) - 2 * a1;
  return out;
}

}  // namespace lamplighter
