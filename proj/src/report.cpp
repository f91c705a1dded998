#include "relpoly/report.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace relpoly {

namespace {

using json = nlohmann::ordered_json;

bool is_identity(const LinearMap& t) {
  return t.a == 1 && t.b == 0 && t.c == 0 && t.d == 1;
}

json vec_json(Vec2 v) { return json{{"x", v.x}, {"y", v.y}}; }

json map_json(const LinearMap& t) {
  return json::array(
      {json::array({t.a, t.b}), json::array({t.c, t.d})});
}

json presentation_json(const PolytopeResult& pr) {
  const Presentation& pi = pr.original;
  json p;
  p["generators"] = std::string{pi.names.x, pi.names.y};
  p["relator"] = render_word(pi.original, pi.names);
  p["reduced_relator"] = render_word(pi.relator, pi.names);
  p["exponent_sums"] = vec_json(pr.info.eps);
  p["b1"] = pr.info.b1;
  p["classification"] = to_string(pr.info.cls);
  if (pr.info.power_multiplicity > 1) {
    p["power_root"] = render_word(pr.info.power_root, pi.names);
    p["power_multiplicity"] = pr.info.power_multiplicity;
  }
  return p;
}

void attach_effective(json& root, const PolytopeResult& pr) {
  if (is_identity(pr.to_original)) return;
  json e;
  e["relator"] = render_word(pr.effective.relator, pr.effective.names);
  e["to_original"] = map_json(pr.to_original);
  e["conversion_steps"] = pr.conversion_steps;
  root["effective"] = e;
}

json polytope_block(const PolytopeResult& pr) {
  json verts = json::array();
  for (const MarkedVertex& v : pr.polytope.vertices()) {
    verts.push_back(json{{"x", v.p.x}, {"y", v.p.y}, {"marked", v.marked}});
  }
  json p;
  p["vertices"] = verts;
  p["normalization"] = "min-corner-origin";
  p["coordinates"] = is_identity(pr.to_original) ? "original" : "converted";
  return p;
}

std::string dump(const json& root) { return root.dump(2) + "\n"; }

std::string power_string(const std::string& base, Int k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

std::string join_nonempty(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += " ";
    out += p;
  }
  return out;
}

std::string indexed_generator(Int i) { return "x_" + std::to_string(i); }

std::string vertex_relator_string(const SplittingData& s) {
  std::vector<std::string> parts;
  parts.reserve(s.relator_indices.size());
  for (size_t j = 0; j < s.relator_indices.size(); ++j) {
    parts.push_back(power_string(indexed_generator(s.relator_indices[j]),
                                 s.relator_exponents[j]));
  }
  return join_nonempty(parts);
}

std::string embedding_string(Int i) {
  return join_nonempty({power_string("t", i), "a", power_string("t", -i)});
}

json witness_json(const SplittingData& s) {
  json w;
  w["stable_letter"] = "t";
  w["rank"] = s.rank;

  json vgens = json::array();
  for (Int i = s.d; i <= s.D; ++i) vgens.push_back(indexed_generator(i));
  w["vertex_group"] =
      json{{"generators", vgens}, {"relator", vertex_relator_string(s)}};

  json egens = json::array();
  for (Int i = s.d; i < s.D; ++i) egens.push_back(indexed_generator(i));
  w["edge_group"] = json{{"generators", egens}, {"rank", s.rank}};

  json mu = json::array();
  for (Int i = s.d; i < s.D; ++i) {
    mu.push_back(json{{"from", indexed_generator(i)},
                      {"to", indexed_generator(i + 1)}});
  }
  w["mu"] = mu;

  json emb = json::array();
  for (Int i = s.d; i <= s.D; ++i) {
    emb.push_back(json{{"generator", indexed_generator(i)},
                       {"image", embedding_string(i)}});
  }
  w["embedding"] = emb;

  w["converted_relator"] =
      render_word(s.converted_relator, GenNames{'a', 't'});
  w["conversion_steps"] = s.conversion_steps;
  return w;
}

json direction_or_null(const std::optional<Direction>& d) {
  return d ? vec_json(d->v) : json(nullptr);
}

}  // namespace

std::string polytope_json(const PolytopeResult& pr) {
  json root;
  root["schema_version"] = kSchemaVersion;
  root["presentation"] = presentation_json(pr);
  attach_effective(root, pr);
  root["polytope"] = polytope_block(pr);
  return dump(root);
}

std::string bns_membership_json(const PolytopeResult& pr, Direction phi) {
  const bool member = in_sigma(pr, phi);
  json root;
  root["schema_version"] = kSchemaVersion;
  root["presentation"] = presentation_json(pr);
  json s;
  s["phi"] = vec_json(phi.v);
  s["in_sigma"] = member;
  s["ascending_hnn_over_fg_base"] = member;
  root["sigma"] = s;
  return dump(root);
}

std::string bns_arcs_json(const PolytopeResult& pr) {
  json root;
  root["schema_version"] = kSchemaVersion;
  root["presentation"] = presentation_json(pr);
  attach_effective(root, pr);
  json s;
  if (pr.info.b1 == 2) {
    const SigmaReport rep = sigma_arcs(pr);
    const NonSigmaResult ns = exists_non_sigma(pr);
    s["sphere"] = "circle";
    s["full_circle"] = rep.full_sphere;
    json arcs = json::array();
    for (const Arc& a : rep.arcs.arcs()) {
      arcs.push_back(json{{"from", vec_json(a.from.v)},
                          {"to", vec_json(a.to.v)}});
    }
    s["arcs"] = arcs;
    s["marked_vertex_count"] = rep.marked_vertex_count;
    s["kernel_certificate"] = direction_or_null(fg_kernel_certificate(pr));
    s["is_z2"] = ns.is_z2;
    s["non_sigma_witness"] = direction_or_null(ns.witness);
  } else {
    const TwoPointSigma two = two_point_sigma(pr);
    s["sphere"] = "two-points";
    s["phi"] = vec_json(two.phi.v);
    s["phi_in_sigma"] = two.positive;
    s["negative_phi_in_sigma"] = two.negative;
    s["kernel_certificate"] = direction_or_null(fg_kernel_certificate(pr));
  }
  root["sigma"] = s;
  return dump(root);
}

std::string split_json(const PolytopeResult& pr, Direction phi,
                       bool with_witness) {
  const ComplexityReport c = splitting_complexity(pr, phi);
  json root;
  root["schema_version"] = kSchemaVersion;
  root["presentation"] = presentation_json(pr);
  attach_effective(root, pr);
  json s;
  s["phi"] = vec_json(phi.v);
  s["thickness"] = c.thickness;
  s["c"] = c.c;
  s["c_f"] = c.c_f;
  s["certified"] = c.certified;
  s["note"] = c.certified
                  ? "equality backed by a finitely-generated-kernel "
                    "certificate"
                  : "upper bound from the constructed witness; equality "
                    "assumes the residual hypothesis";
  if (with_witness) s["witness"] = witness_json(hnn_splitting(pr, phi));
  root["splitting"] = s;
  return dump(root);
}

namespace {

std::string presentation_text(const PolytopeResult& pr) {
  const GenNames& nm = pr.original.names;
  std::ostringstream out;
  out << "presentation: < " << nm.x << ", " << nm.y << " | "
      << render_word(pr.original.relator, nm) << " >\n";
  out << "classification: " << to_string(pr.info.cls)
      << " (b1 = " << pr.info.b1 << ", exponent sums "
      << to_string(pr.info.eps) << ")\n";
  if (!is_identity(pr.to_original)) {
    const LinearMap& t = pr.to_original;
    out << "converted relator: "
        << render_word(pr.effective.relator, pr.effective.names) << " ("
        << pr.conversion_steps << " rounds; basis to original [[" << t.a
        << ", " << t.b << "], [" << t.c << ", " << t.d << "]])\n";
  }
  return out.str();
}

}  // namespace

std::string polytope_text(const PolytopeResult& pr) {
  std::ostringstream out;
  out << presentation_text(pr);
  out << "polytope: " << pr.polytope.size()
      << (pr.polytope.size() == 1 ? " vertex" : " vertices")
      << ", min corner at the origin\n";
  for (const MarkedVertex& v : pr.polytope.vertices()) {
    out << "  " << to_string(v.p) << "  "
        << (v.marked ? "marked" : "unmarked") << "\n";
  }
  return out.str();
}

std::string bns_membership_text(const PolytopeResult& pr, Direction phi) {
  std::ostringstream out;
  out << presentation_text(pr);
  if (in_sigma(pr, phi)) {
    out << "phi = " << to_string(phi)
        << ": in Sigma (the group is an ascending HNN extension over a "
           "finitely generated base in that direction)\n";
  } else {
    out << "phi = " << to_string(phi) << ": not in Sigma\n";
  }
  return out.str();
}

std::string bns_arcs_text(const PolytopeResult& pr) {
  std::ostringstream out;
  out << presentation_text(pr);
  const std::optional<Direction> cert = fg_kernel_certificate(pr);
  if (pr.info.b1 == 2) {
    const SigmaReport rep = sigma_arcs(pr);
    if (rep.full_sphere) {
      out << "Sigma: the full circle of rays\n";
    } else if (rep.arcs.is_empty()) {
      out << "Sigma: empty\n";
    } else {
      out << "Sigma: " << rep.arcs.arcs().size()
          << " open arc(s), endpoints excluded\n";
      for (const Arc& a : rep.arcs.arcs()) {
        out << "  " << to_string(a.from) << " .. " << to_string(a.to) << "\n";
      }
    }
    out << "marked vertices: " << rep.marked_vertex_count << " of "
        << pr.polytope.size() << "\n";
    const NonSigmaResult ns = exists_non_sigma(pr);
    if (ns.is_z2) {
      out << "complement: empty (the group is Z^2)\n";
    } else {
      out << "complement witness: " << to_string(*ns.witness)
          << " lies outside Sigma\n";
    }
  } else {
    const TwoPointSigma two = two_point_sigma(pr);
    out << "character sphere: two points, +-phi with phi = "
        << to_string(two.phi) << "\n";
    out << "  +phi in Sigma: " << (two.positive ? "yes" : "no") << "\n";
    out << "  -phi in Sigma: " << (two.negative ? "yes" : "no") << "\n";
  }
  if (cert) {
    out << "kernel certificate: phi = " << to_string(*cert)
        << " and its negative both lie in Sigma (finitely generated "
           "kernel)\n";
  } else {
    out << "kernel certificate: none (no direction has both signs in "
           "Sigma)\n";
  }
  return out.str();
}

std::string split_text(const PolytopeResult& pr, Direction phi,
                       bool with_witness) {
  const ComplexityReport c = splitting_complexity(pr, phi);
  std::ostringstream out;
  out << presentation_text(pr);
  out << "phi = " << to_string(phi) << ": thickness " << c.thickness
      << ", splitting complexity c = " << c.c << ", c_f = " << c.c_f
      << (c.certified ? " (certified)" : " (upper bound; equality assumes "
                                         "the residual hypothesis)")
      << "\n";
  if (with_witness) {
    const SplittingData s = hnn_splitting(pr, phi);
    out << "witness: HNN splitting over a free group of rank " << s.rank
        << "\n";
    out << "  stable letter t; converted relator "
        << render_word(s.converted_relator, GenNames{'a', 't'}) << "\n";
    out << "  vertex group: < ";
    for (Int i = s.d; i <= s.D; ++i) {
      out << indexed_generator(i) << (i < s.D ? ", " : "");
    }
    out << " | " << vertex_relator_string(s) << " >\n";
    out << "  edge group: free on ";
    for (Int i = s.d; i < s.D; ++i) {
      out << indexed_generator(i) << (i + 1 < s.D ? ", " : "");
    }
    out << "\n";
    out << "  mu: x_i -> x_{i+1}; in the group x_i = t^i a t^-i\n";
  }
  return out.str();
}

std::string suites_text(const std::vector<SuiteResult>& rs) {
  std::ostringstream out;
  size_t failed = 0;
  for (const SuiteResult& r : rs) {
    if (r.passed) {
      out << r.name << ": " << r.trials << " trials ok\n";
      continue;
    }
    ++failed;
    out << r.name << ": FAILED - " << r.detail << "\n";
    if (!r.counterexample.empty()) {
      out << "  minimized counterexample: " << r.counterexample << "\n";
    }
  }
  if (failed == 0) {
    out << "all suites passed\n";
  } else {
    out << failed << " suite(s) failed\n";
  }
  return out.str();
}

namespace {

// Pixel mapping for the SVG drawing: 40 px per lattice unit, one unit of
// margin, y pointing up. All emitted coordinates are integers (half-unit
// offsets are 20 px).
struct Canvas {
  Int minx = 0, maxx = 0, miny = 0, maxy = 0;

  void include(Vec2 v) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  Int width() const { return (maxx - minx + 2) * 40; }
  Int height() const { return (maxy - miny + 2) * 40; }
  Int px(Int x) const { return (x - minx + 1) * 40; }
  Int py(Int y) const { return (maxy + 1 - y) * 40; }
};

void svg_vertex_dots(std::ostringstream& out, const Canvas& c,
                     const std::vector<MarkedVertex>& vs, Int dx, Int dy,
                     const char* color, int radius) {
  for (const MarkedVertex& v : vs) {
    out << "  <circle cx=\"" << c.px(v.p.x) + dx << "\" cy=\""
        << c.py(v.p.y) - dy << "\" r=\"" << radius << "\" stroke=\"" << color
        << "\" stroke-width=\"2\" fill=\""
        << (v.marked ? color : "#ffffff") << "\"/>\n";
  }
}

void svg_outline(std::ostringstream& out, const Canvas& c,
                 const std::vector<MarkedVertex>& vs, Int dx, Int dy,
                 const char* color, const char* fill, int width) {
  if (vs.size() == 1) return;  // the vertex dot is the whole drawing
  out << (vs.size() == 2 ? "  <line x1=\"" : "  <polygon points=\"");
  if (vs.size() == 2) {
    out << c.px(vs[0].p.x) + dx << "\" y1=\"" << c.py(vs[0].p.y) - dy
        << "\" x2=\"" << c.px(vs[1].p.x) + dx << "\" y2=\""
        << c.py(vs[1].p.y) - dy << "\" stroke=\"" << color
        << "\" stroke-width=\"" << width << "\"/>\n";
    return;
  }
  for (size_t i = 0; i < vs.size(); ++i) {
    out << c.px(vs[i].p.x) + dx << "," << c.py(vs[i].p.y) - dy
        << (i + 1 < vs.size() ? " " : "");
  }
  out << "\" stroke=\"" << color << "\" stroke-width=\"" << width
      << "\" fill=\"" << fill << "\"/>\n";
}

}  // namespace

std::string polytope_svg(const PolytopeResult& pr) {
  const bool full_drawing = pr.info.b1 == 2;

  // Walk positions of the cyclic prefixes, in drawing coordinates.
  std::vector<Vec2> walk;
  std::map<Vec2, Int> counts;
  if (full_drawing) {
    Vec2 pos{0, 0};
    walk.push_back(pos);
    counts[pos] += 1;
    const Word& r = pr.effective.relator;
    for (size_t i = 0; i + 1 < r.size(); ++i) {
      const Letter& l = r[i];
      pos = pos + (l.gen == Gen::x ? Vec2{l.sign, 0} : Vec2{0, l.sign});
      walk.push_back(pos);
      counts[pos] += 1;
    }
  }

  Canvas c;
  for (const Vec2& v : walk) c.include(v);
  for (const MarkedVertex& v : pr.polytope.vertices()) c.include(v.p);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << c.width() << "\" height=\"" << c.height() << "\" viewBox=\"0 0 "
      << c.width() << " " << c.height() << "\">\n";
  out << "  <rect width=\"" << c.width() << "\" height=\"" << c.height()
      << "\" fill=\"#ffffff\"/>\n";

  // Light lattice grid with the axes slightly darker.
  for (Int x = c.minx; x <= c.maxx + 1; ++x) {
    out << "  <line x1=\"" << c.px(x) << "\" y1=\"0\" x2=\"" << c.px(x)
        << "\" y2=\"" << c.height() << "\" stroke=\""
        << (x == 0 ? "#b0b0b0" : "#e4e4e4") << "\" stroke-width=\"1\"/>\n";
  }
  for (Int y = c.miny; y <= c.maxy + 1; ++y) {
    out << "  <line x1=\"0\" y1=\"" << c.py(y) << "\" x2=\"" << c.width()
        << "\" y2=\"" << c.py(y) << "\" stroke=\""
        << (y == 0 ? "#b0b0b0" : "#e4e4e4") << "\" stroke-width=\"1\"/>\n";
  }

  if (full_drawing) {
    // Closed walk trace.
    out << "  <polyline points=\"";
    for (const Vec2& v : walk) out << c.px(v.x) << "," << c.py(v.y) << " ";
    out << c.px(walk.front().x) << "," << c.py(walk.front().y)
        << "\" stroke=\"#888888\" stroke-width=\"2\" fill=\"none\"/>\n";
    for (const auto& kv : counts) {
      out << "  <circle cx=\"" << c.px(kv.first.x) << "\" cy=\""
          << c.py(kv.first.y) << "\" r=\"3\" fill=\"#555555\"/>\n";
    }

    // Hull of the walk multiset, with multiplicity-1 vertices filled.
    const MarkedPolytope hull = hull_of_multiset(counts);
    svg_outline(out, c, hull.vertices(), 0, 0, "#3465a4", "none", 3);
    svg_vertex_dots(out, c, hull.vertices(), 0, 0, "#3465a4", 5);

    // The marked polytope, drawn at the half-unit offset in the hull's own
    // coordinates so it sits where it was carved out.
    const MarkedPolytope m = minkowski_diff(hull, unit_square());
    svg_outline(out, c, m.vertices(), 20, 20, "#ce5c00",
                "rgba(245, 121, 0, 0.25)", 3);
    svg_vertex_dots(out, c, m.vertices(), 20, 20, "#ce5c00", 6);
  } else {
    svg_outline(out, c, pr.polytope.vertices(), 0, 0, "#ce5c00",
                "rgba(245, 121, 0, 0.25)", 3);
    svg_vertex_dots(out, c, pr.polytope.vertices(), 0, 0, "#ce5c00", 6);
  }

  out << "  <text x=\"8\" y=\"16\" font-family=\"monospace\" font-size=\"13\""
      << " fill=\"#333333\">"
      << render_word(pr.original.relator, pr.original.names) << "</text>\n";
  if (full_drawing) {
    out << "  <text x=\"8\" y=\"32\" font-family=\"monospace\" "
           "font-size=\"11\" fill=\"#3465a4\">walk hull (integral)</text>\n";
    out << "  <text x=\"8\" y=\"46\" font-family=\"monospace\" "
           "font-size=\"11\" fill=\"#ce5c00\">polytope (half-unit "
           "offset)</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace relpoly
