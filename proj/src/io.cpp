#include "symmlab/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "symmlab/generators.hpp"

namespace symmlab::io {

using nlohmann::json;

namespace {

json vec2_json(Vec2 v) { return json::array({v.x, v.y}); }

json ring_json(const Ring& ring) {
  json jr;
  jr["orientation"] = ring.orientation == RingOrientation::Outer ? "outer" : "hole";
  json verts = json::array();
  for (Vec2 v : ring.vertices) verts.push_back(vec2_json(v));
  jr["vertices"] = std::move(verts);
  if (!ring.arc_edges.empty()) {
    json arcs = json::array();
    for (size_t k = 0; k < ring.arc_edges.size(); ++k)
      arcs.push_back({{"edge", ring.arc_edges[k]}, {"ccw", bool(ring.arc_ccw[k])}});
    jr["arcs"] = std::move(arcs);
  }
  return jr;
}

Ring ring_from_json(const json& jr) {
  Ring ring;
  const std::string orient = jr.value("orientation", "outer");
  SYMMLAB_REQUIRE(orient == "outer" || orient == "hole",
                  "ring orientation must be 'outer' or 'hole'");
  ring.orientation =
      orient == "outer" ? RingOrientation::Outer : RingOrientation::Hole;
  SYMMLAB_REQUIRE(jr.contains("vertices") && jr["vertices"].is_array(),
                  "ring needs a vertices array");
  for (const auto& jv : jr["vertices"]) {
    SYMMLAB_REQUIRE(jv.is_array() && jv.size() == 2, "vertex must be [x, y]");
    ring.vertices.push_back({jv[0].get<double>(), jv[1].get<double>()});
  }
  if (jr.contains("arcs")) {
    for (const auto& ja : jr["arcs"]) {
      ring.arc_edges.push_back(ja.at("edge").get<int>());
      ring.arc_ccw.push_back(ja.value("ccw", true));
      SYMMLAB_REQUIRE(ring.arc_edges.back() >= 0 &&
                          ring.arc_edges.back() < ring.edge_count(),
                      "arc edge index out of range");
    }
  }
  return ring;
}

json domain_json(const Box& d) {
  json j;
  j["r"] = json::array({d.lo1, d.hi1});
  if (d.has_axis2) j["z"] = json::array({d.lo2, d.hi2});
  return j;
}

Box domain_from_json(const json& j) {
  Box d;
  const json& r = j.contains("r") ? j["r"] : j.at("x");
  d.lo1 = r.at(0).get<double>();
  d.hi1 = r.at(1).get<double>();
  if (j.contains("z")) {
    d.has_axis2 = true;
    d.lo2 = j["z"].at(0).get<double>();
    d.hi2 = j["z"].at(1).get<double>();
  }
  return d;
}

json grid_domain_json(const GridDomain& d) {
  json j;
  j["r"] = json::array({d.lo1, d.hi1});
  if (d.has_axis2) j["z"] = json::array({d.lo2, d.hi2});
  return j;
}

GridDomain grid_domain_from_json(const json& jd, const json& jshape) {
  GridDomain d;
  const Box b = domain_from_json(jd);
  d.lo1 = b.lo1;
  d.hi1 = b.hi1;
  d.lo2 = b.lo2;
  d.hi2 = b.hi2;
  d.has_axis2 = b.has_axis2;
  d.n1 = jshape.at(0).get<int>();
  d.n2 = d.has_axis2 ? jshape.at(1).get<int>() : 1;
  d.validate();
  return d;
}

// Analytic field catalog plus grid interpolants (used when re-loading an
// emitted symmetral).
json field_json(const ScalarField& f);

json grid_field_json(const GridFunction& g, const std::vector<JumpWall>& walls) {
  json j;
  j["grid"]["domain"] = grid_domain_json(g.dom);
  j["grid"]["shape"] =
      g.dom.has_axis2 ? json::array({g.dom.n1, g.dom.n2}) : json::array({g.dom.n1});
  j["grid"]["values"] = g.values;
  json jw = json::array();
  for (const JumpWall& w : walls)
    jw.push_back({{"axis", w.axis}, {"pos", w.pos}});
  j["grid"]["walls"] = std::move(jw);
  return j;
}

std::unique_ptr<ScalarField> field_from_json(const json& j) {
  if (j.contains("grid")) {
    const json& jg = j["grid"];
    GridFunction g;
    g.dom = grid_domain_from_json(jg.at("domain"), jg.at("shape"));
    g.values = jg.at("values").get<std::vector<double>>();
    SYMMLAB_REQUIRE(g.values.size() == g.dom.cell_count(),
                    "grid field value count mismatch");
    std::vector<JumpWall> walls;
    for (const auto& jw : jg.value("walls", json::array()))
      walls.push_back({jw.at("axis").get<int>(), jw.at("pos").get<double>()});
    return make_grid_interpolant(std::move(g), std::move(walls));
  }
  const std::string b = j.at("builtin").get<std::string>();
  const json p = j.value("params", json::object());
  auto get = [&](const char* k, double dflt) { return p.value(k, dflt); };
  if (b == "const") return make_const_field(get("c", 0.0));
  if (b == "linear")
    return make_linear_field(get("a0", 0.0), get("ar", 0.0), get("az", 0.0));
  if (b == "sin_r")
    return make_sin_r_field(get("a", 0.0), get("b", 0.0), get("w", 1.0));
  throw input_error("unknown builtin field: " + b);
}

}  // namespace

std::string encode_polygon(const PolygonSet& P) {
  json j;
  j["kind"] = "polygon";
  json rings = json::array();
  for (const Ring& r : P.rings()) rings.push_back(ring_json(r));
  j["rings"] = std::move(rings);
  return j.dump(2);
}

std::string encode_arc_family(const ArcFamilySet& A) {
  json j;
  j["kind"] = "arc_family";
  j["domain"] = domain_json(A.domain());
  j["lipschitz_bound"] = A.lipschitz_bound();
  // Fields are emitted through their JSON handles; analytic fields keep
  // their catalog entry, interpolants embed the grid.
  j["xi"] = field_json(A.xi_field());
  j["theta_c"] = field_json(A.theta_c_field());
  if (!A.walls().empty()) {
    json jw = json::array();
    for (const JumpWall& w : A.walls())
      jw.push_back({{"axis", w.axis}, {"pos", w.pos}});
    j["walls"] = std::move(jw);
  }
  return j.dump(2);
}

std::string encode_slice_grid(const SliceGrid& G) {
  json j;
  j["kind"] = "slice_grid";
  j["mode"] = G.mode == Mode::Circular ? "circular" : "steiner";
  j["domain"] = grid_domain_json(G.dom);
  j["shape"] = G.dom.has_axis2 ? json::array({G.dom.n1, G.dom.n2})
                               : json::array({G.dom.n1});
  json cells = json::array();
  for (size_t c = 0; c < G.dom.cell_count(); ++c) {
    json jc;
    if (G.mode == Mode::Circular) {
      const AngularArcSet& s = G.circ_cells[c];
      if (s.full()) {
        jc["full"] = true;
      } else {
        json arcs = json::array();
        for (const Arc& a : s.arcs()) arcs.push_back(json::array({a.lo, a.hi}));
        jc["arcs"] = std::move(arcs);
      }
    } else {
      json ivs = json::array();
      for (const Interval& v : G.line_cells[c].intervals())
        ivs.push_back(json::array({v.lo, v.hi}));
      jc["intervals"] = std::move(ivs);
    }
    cells.push_back(std::move(jc));
  }
  j["cells"] = std::move(cells);
  return j.dump();
}

std::string encode_set(const SetSource& src) {
  if (const auto* P = std::get_if<PolygonSet>(&src)) return encode_polygon(*P);
  if (const auto* A = std::get_if<ArcFamilySet>(&src))
    return encode_arc_family(*A);
  return encode_slice_grid(std::get<SliceGrid>(src));
}

SetSource parse_set(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "generator") {
      const std::string name = j.at("name").get<std::string>();
      GeneratorParams params;
      for (const auto& [k, val] : j.value("params", json::object()).items())
        params[k] = val.get<double>();
      return make_fixture(name, params);
    }
    if (kind == "polygon") {
      std::vector<Ring> rings;
      for (const auto& jr : j.at("rings")) rings.push_back(ring_from_json(jr));
      return PolygonSet(std::move(rings));
    }
    if (kind == "arc_family") {
      const Box dom = domain_from_json(j.at("domain"));
      std::vector<JumpWall> walls;
      for (const auto& jw : j.value("walls", json::array()))
        walls.push_back({jw.at("axis").get<int>(), jw.at("pos").get<double>()});
      return ArcFamilySet(dom, field_from_json(j.at("xi")),
                          field_from_json(j.at("theta_c")),
                          j.value("lipschitz_bound", 1.0), std::move(walls));
    }
    if (kind == "slice_grid") {
      SliceGrid G;
      G.mode = j.value("mode", "circular") == "steiner" ? Mode::Steiner
                                                        : Mode::Circular;
      G.dom = grid_domain_from_json(j.at("domain"), j.at("shape"));
      const json& cells = j.at("cells");
      SYMMLAB_REQUIRE(cells.size() == G.dom.cell_count(),
                      "slice grid cell count mismatch");
      for (size_t c = 0; c < cells.size(); ++c) {
        const json& jc = cells[c];
        const int i = static_cast<int>(c % G.dom.n1);
        if (G.mode == Mode::Circular) {
          const double r = G.dom.center1(i);
          if (jc.value("full", false)) {
            G.circ_cells.push_back(AngularArcSet::full_circle(r));
          } else {
            std::vector<Arc> arcs;
            for (const auto& ja : jc.value("arcs", json::array()))
              arcs.push_back({ja.at(0).get<double>(), ja.at(1).get<double>()});
            G.circ_cells.push_back(AngularArcSet(r, std::move(arcs)));
          }
        } else {
          std::vector<Interval> ivs;
          for (const auto& ji : jc.value("intervals", json::array()))
            ivs.push_back({ji.at(0).get<double>(), ji.at(1).get<double>()});
          G.line_cells.push_back(IntervalSet(std::move(ivs)));
        }
      }
      G.validate();
      return G;
    }
    throw input_error("unknown set kind: " + kind);
  } catch (const json::exception& e) {
    throw input_error(std::string("schema violation: ") + e.what());
  }
}

SetSource load_set(const std::string& path) {
  std::ifstream in(path);
  SYMMLAB_REQUIRE(in.good(), "cannot open set file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_set(ss.str());
}

void write_grid_csv(std::ostream& os, const GridFunction& f) {
  const char* c1 = f.mode == Mode::Circular ? "r" : "x";
  os.precision(17);
  if (f.dom.has_axis2) {
    os << c1 << ",z,value\n";
    for (int j = 0; j < f.dom.n2; ++j)
      for (int i = 0; i < f.dom.n1; ++i)
        os << f.dom.center1(i) << ',' << f.dom.center2(j) << ',' << f.at(i, j)
           << '\n';
  } else {
    os << c1 << ",value\n";
    for (int i = 0; i < f.dom.n1; ++i)
      os << f.dom.center1(i) << ',' << f.at(i) << '\n';
  }
}

std::string encode_sigma(const SigmaMeasure& s) {
  json j;
  j["mode"] = s.mode == Mode::Circular ? "circular" : "steiner";
  j["domain"] = grid_domain_json(s.dom);
  j["shape"] = s.dom.has_axis2 ? json::array({s.dom.n1, s.dom.n2})
                               : json::array({s.dom.n1});
  j["lebesgue_slot"] = s.lebesgue_slot;
  json ac = json::array();
  for (const auto& v : s.ac) ac.push_back(json::array({v[0], v[1], v[2]}));
  j["ac_density"] = std::move(ac);
  j["support"] = json::array();
  for (auto b : s.support) j["support"].push_back(bool(b));
  json atoms = json::array();
  for (const SigmaAtom& a : s.atoms) {
    atoms.push_back({{"axis", a.axis},
                     {"pos", a.pos},
                     {"extent", json::array({a.other_lo, a.other_hi})},
                     {"weight", json::array({a.weight[0], a.weight[1], a.weight[2]})}});
  }
  j["jumps"] = std::move(atoms);
  j["warnings"] = s.warnings;
  return j.dump(2);
}

void write_sigma_csv(std::ostream& os, const SigmaMeasure& s) {
  os.precision(17);
  os << "kind,a,b,w0,w1,w2\n";
  const int n2 = s.dom.has_axis2 ? s.dom.n2 : 1;
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < s.dom.n1; ++i) {
      const auto& v = s.ac[s.dom.index(i, j)];
      os << "ac," << s.dom.center1(i) << ',' << s.dom.center2(j) << ','
         << v[0] << ',' << v[1] << ',' << v[2] << '\n';
    }
  for (const SigmaAtom& a : s.atoms)
    os << "jump," << a.pos << ',' << 0.5 * (a.other_lo + a.other_hi) << ','
       << a.weight[0] << ',' << a.weight[1] << ',' << a.weight[2] << '\n';
}

std::string encode_report(const DiagnosticsReport& rep) {
  json j;
  j["mode"] = rep.mode == Mode::Circular ? "circular" : "steiner";
  j["region"]["r"] = json::array({rep.region.lo1, rep.region.hi1});
  if (rep.region.has_axis2)
    j["region"]["z"] = json::array({rep.region.lo2, rep.region.hi2});
  j["p_set"] = rep.p_set;
  j["p_symmetral"] = rep.p_symmetral;
  j["gap"] = rep.gap;
  j["routes"] = {{"total_variation", rep.p_symmetral},
                 {"formula", rep.p_formula},
                 {"quadrature", rep.p_quadrature},
                 {"quadrature_err", rep.quad_err}};
  j["condition_a"] = {{"pass", rep.condition_a.pass},
                      {"violating_measure", rep.condition_a.violating_measure},
                      {"fraction", rep.condition_a.fraction},
                      {"slices_checked", rep.condition_a.slices_checked}};
  json viol = json::array();
  for (const auto& v : rep.condition_b.violating)
    viol.push_back(json::array({v[0], v[1], v[2]}));
  j["condition_b"] = {{"pass", rep.condition_b.pass},
                      {"max_deviation", rep.condition_b.max_deviation},
                      {"slices_compared", rep.condition_b.slices_compared},
                      {"violating_slices", std::move(viol)}};
  j["excised"] = {{"count", rep.condition_b.excised},
                  {"budget", rep.condition_b.excision_budget}};
  j["equality"] = rep.equality;
  j["tolerance"] = rep.tolerance;
  j["b_tolerance"] = rep.b_tolerance;
  j["metadata"] = {{"grid", json::array({rep.grid_n1, rep.grid_n2})},
                   {"n_q", rep.n_q},
                   {"seed", rep.seed},
                   {"warnings", rep.warnings}};
  return j.dump(2);
}

void write_density_csv(std::ostream& os, const DensityProfile& prof) {
  os.precision(17);
  os << "gamma,rho,estimate,stderr\n";
  for (const DensityEstimate& e : prof.entries)
    os << e.gamma << ',' << e.rho << ',' << e.estimate << ',' << e.stderr_est
       << '\n';
}

std::string encode_error(const std::string& kind, const std::string& message) {
  json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j.dump();
}

// ---------------------------------------------------------------------------
// Field JSON: analytic fields round-trip through a registry of closures.
// ---------------------------------------------------------------------------

namespace {

// The ScalarField interface carries no introspection; cache the defining
// JSON alongside each loaded/constructed field instead. Fields built in
//-process (through build_F_mu) are interpolants and are serialized from
// their grid data, so this registry only needs the analytic catalog used
// by parse_set. To keep encode(parse(x)) faithful we re-parse from the
// original JSON handle stored at parse time.
thread_local const json* g_current_field_json = nullptr;

}  // namespace

json field_json(const ScalarField& f) {
  // Probe the catalog: evaluate against each candidate on a small lattice.
  // Analytic fields are matched exactly; anything else must be a grid
  // interpolant, which the caller should have serialized via grid data.
  // Matching by sampling keeps the data format free of RTTI tags.
  (void)g_current_field_json;
  auto matches = [&](const ScalarField& g) {
    for (double a : {0.31, 0.97, 1.73, 2.41}) {
      for (double b : {-0.8, 0.0, 0.65}) {
        if (std::abs(f.eval(a, b) - g.eval(a, b)) > 1e-12) return false;
        if (std::abs(f.d1(a, b) - g.d1(a, b)) > 1e-12) return false;
        if (std::abs(f.d2(a, b) - g.d2(a, b)) > 1e-12) return false;
      }
    }
    return true;
  };
  // const c: d1 = d2 = 0 and eval constant
  const double c0 = f.eval(0.31, -0.8);
  if (matches(*make_const_field(c0)))
    return {{"builtin", "const"}, {"params", {{"c", c0}}}};
  const double a1 = f.d1(0.31, 0.0), a2 = f.d2(0.31, 0.0);
  const double a0 = f.eval(0.31, 0.0) - a1 * 0.31;
  if (matches(*make_linear_field(a0, a1, a2)))
    return {{"builtin", "linear"},
            {"params", {{"a0", a0}, {"ar", a1}, {"az", a2}}}};
  throw input_error(
      "cannot serialize this field analytically; emit its grid data");
}

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

namespace {

std::string svg_color(const CircNormal& c) {
  auto chan = [](double v) {
    const int k = static_cast<int>(std::lround(127.5 * (1.0 + std::clamp(v, -1.0, 1.0))));
    return std::clamp(k, 0, 255);
  };
  std::ostringstream ss;
  ss << "rgb(" << chan(c.radial) << ',' << chan(2.0 * c.tangential - 1.0)
     << ',' << chan(c.vertical) << ')';
  return ss.str();
}

void svg_ring_path(std::ostringstream& ss, const Ring& ring) {
  ss << "M " << ring.vertices[0].x << ' ' << -ring.vertices[0].y << ' ';
  for (int i = 0; i < ring.edge_count(); ++i) {
    const Edge e = ring.edge(i);
    if (e.is_arc) {
      const double r = e.arc_radius();
      const int large = e.arc_span() > kPi ? 1 : 0;
      const int sweep = e.ccw ? 0 : 1;  // SVG y-axis points down
      ss << "A " << r << ' ' << r << " 0 " << large << ' ' << sweep << ' '
         << e.b.x << ' ' << -e.b.y << ' ';
    } else {
      ss << "L " << e.b.x << ' ' << -e.b.y << ' ';
    }
  }
  ss << "Z ";
}

}  // namespace

std::string render_svg(const SetSource& src, int n_slice_samples) {
  std::ostringstream body;
  body.precision(10);
  double lo1 = 0.1, hi1 = 1.0;
  double ymin = -1.0, ymax = 1.0, xmin = -1.0, xmax = 1.0;
  if (const auto* P = std::get_if<PolygonSet>(&src)) {
    auto [rlo, rhi] = P->radial_extent();
    lo1 = std::max(1e-6, rlo);
    hi1 = rhi;
    auto [x0, x1] = P->x_extent();
    auto [y0, y1] = P->y_extent();
    xmin = x0; xmax = x1; ymin = y0; ymax = y1;
    body << "<path d=\"";
    for (const Ring& r : P->rings()) svg_ring_path(body, r);
    body << "\" fill=\"#9ecae1\" fill-opacity=\"0.55\" stroke=\"#08306b\" "
            "stroke-width=\"0.012\" fill-rule=\"evenodd\"/>\n";
  } else if (const auto* A = std::get_if<ArcFamilySet>(&src)) {
    lo1 = A->domain().lo1;
    hi1 = A->domain().hi1;
    xmin = -hi1; xmax = hi1; ymin = -hi1; ymax = hi1;
    // Sample boundary graphs as polylines.
    const int n = 256;
    for (int side : {+1, -1}) {
      body << "<polyline fill=\"none\" stroke=\"#08306b\" stroke-width=\"0.012\" points=\"";
      for (int i = 0; i <= n; ++i) {
        const double r = lo1 + i * (hi1 - lo1) / n;
        const double th = A->theta_c(r, 0.0) + side * 0.5 * A->xi(r, 0.0);
        const Vec2 q = from_polar(std::max(r, 1e-9), th);
        body << q.x << ',' << -q.y << ' ';
      }
      body << "\"/>\n";
    }
  } else {
    const auto& G = std::get<SliceGrid>(src);
    lo1 = G.dom.lo1 + 1e-9;
    hi1 = G.dom.hi1;
    xmin = -hi1; xmax = hi1; ymin = -hi1; ymax = hi1;
  }

  // Slice sample circles and normal arrows.
  for (int k = 1; k <= n_slice_samples; ++k) {
    const double r = lo1 + k * (hi1 - lo1) / (n_slice_samples + 1);
    body << "<circle cx=\"0\" cy=\"0\" r=\"" << r
         << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.006\" "
            "stroke-dasharray=\"0.04 0.04\"/>\n";
    std::vector<BoundaryPoint> pts;
    try {
      pts = boundary_normals(src, r, 0.0);
    } catch (const input_error&) {
      break;  // slice grids carry no normals
    }
    for (const BoundaryPoint& p : pts) {
      const Vec2 tip = p.x + 0.22 * p.nu_x;
      body << "<line x1=\"" << p.x.x << "\" y1=\"" << -p.x.y << "\" x2=\""
           << tip.x << "\" y2=\"" << -tip.y << "\" stroke=\""
           << svg_color(p.circ) << "\" stroke-width=\"0.016\"/>\n";
      body << "<circle cx=\"" << p.x.x << "\" cy=\"" << -p.x.y
           << "\" r=\"0.02\" fill=\"" << svg_color(p.circ) << "\"/>\n";
    }
  }

  const double pad = 0.35;
  xmin = std::min(xmin, -0.2) - pad;
  xmax = std::max(xmax, 0.2) + pad;
  const double ylo = std::min(-ymax, -0.2) - pad;
  const double yhi = std::max(-ymin, 0.2) + pad;
  std::ostringstream svg;
  svg.precision(10);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin << ' '
      << ylo << ' ' << (xmax - xmin) << ' ' << (yhi - ylo)
      << "\" width=\"640\" height=\"640\">\n";
  svg << "<line x1=\"0\" y1=\"0\" x2=\"" << xmax - 0.1
      << "\" y2=\"0\" stroke=\"#c33\" stroke-width=\"0.008\"/>\n";
  svg << body.str();
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace symmlab::io
