#include "symmlab/polygon.hpp"

#include <algorithm>
#include <cmath>

namespace symmlab {

namespace {
constexpr double kGeomEps = 1e-12;

// Roots of |p + t u|^2 = r^2 on the real line.
int circle_line_roots(Vec2 p, Vec2 u, double r, double roots[2]) {
  const double A = norm2(u);
  const double B = dot(p, u);
  const double C = norm2(p) - r * r;
  if (A == 0.0) return 0;
  const double disc = B * B - A * C;
  if (disc < 0.0) return 0;
  const double sq = std::sqrt(disc);
  // Stable quadratic: avoid cancellation in the smaller root.
  const double q = -(B + std::copysign(sq, B));
  double t0, t1;
  if (q != 0.0) {
    t0 = q / A;
    t1 = C / q;
  } else {
    t0 = 0.0;
    t1 = 0.0;
  }
  if (t0 > t1) std::swap(t0, t1);
  roots[0] = t0;
  roots[1] = t1;
  return disc == 0.0 ? 1 : 2;
}

// Is angle t inside the traversal (a -> b, direction per ccw) of an arc,
// half-open at the start?
bool angle_in_arc(double t, double th_a, double th_b, bool ccw) {
  double span = ccw ? wrap_angle(th_b - th_a) : wrap_angle(th_a - th_b);
  if (span <= 0.0) span += kTwoPi;
  double off = ccw ? wrap_angle(t - th_a) : wrap_angle(th_a - t);
  if (off < 0.0) off += kTwoPi;
  return off > 0.0 && off <= span;
}
}  // namespace

double Edge::arc_span() const {
  const double th_a = angle_of(a), th_b = angle_of(b);
  double span = ccw ? wrap_angle(th_b - th_a) : wrap_angle(th_a - th_b);
  if (span <= 0.0) span += kTwoPi;
  return span;
}

double Edge::length() const {
  return is_arc ? arc_radius() * arc_span() : norm(b - a);
}

Vec2 Edge::point(double t) const {
  if (!is_arc) return a + t * (b - a);
  const double th_a = angle_of(a);
  const double s = ccw ? arc_span() : -arc_span();
  return from_polar(arc_radius(), th_a + t * s);
}

Vec2 Edge::tangent(double t) const {
  if (!is_arc) return unit(b - a);
  const Vec2 x = point(t);
  const Vec2 e_theta = unit(Vec2{-x.y, x.x});
  return ccw ? e_theta : -e_theta;
}

Edge Ring::edge(int i) const {
  const int n = edge_count();
  Edge e;
  e.a = vertices[i];
  e.b = vertices[(i + 1) % n];
  for (size_t k = 0; k < arc_edges.size(); ++k) {
    if (arc_edges[k] == i) {
      e.is_arc = true;
      e.ccw = arc_ccw[k];
      break;
    }
  }
  return e;
}

double Ring::signed_area() const {
  // Shoelace over chords plus circular-segment corrections for arc edges.
  const int n = edge_count();
  double twice = 0.0;
  for (int i = 0; i < n; ++i) {
    const Edge e = edge(i);
    twice += cross(e.a, e.b);
    if (e.is_arc) {
      const double s = e.arc_span();
      const double seg = e.arc_radius() * e.arc_radius() * (s - std::sin(s));
      twice += e.ccw ? seg : -seg;
    }
  }
  return 0.5 * twice;
}

PolygonSet::PolygonSet(std::vector<Ring> rings) : rings_(std::move(rings)) {
  validate_and_orient();
}

void PolygonSet::validate_and_orient() {
  SYMMLAB_REQUIRE(!rings_.empty(), "polygon must have at least one ring");
  for (Ring& ring : rings_) {
    SYMMLAB_REQUIRE(ring.vertices.size() >= 2, "ring needs at least 2 vertices");
    SYMMLAB_REQUIRE(ring.arc_edges.size() == ring.arc_ccw.size(),
                    "arc edge flags mismatch");
    const int n = ring.edge_count();
    for (int i = 0; i < n; ++i) {
      const Edge e = ring.edge(i);
      SYMMLAB_REQUIRE(e.length() > kGeomEps, "degenerate ring: zero-length edge");
      if (e.is_arc) {
        SYMMLAB_REQUIRE(std::abs(norm(e.a) - norm(e.b)) < 1e-9 * (1.0 + norm(e.a)),
                        "arc edge endpoints must share a radius");
        SYMMLAB_REQUIRE(norm(e.a) > kGeomEps, "arc edge through the origin");
      }
    }
    SYMMLAB_REQUIRE(ring.vertices.size() >= 3 || !ring.arc_edges.empty(),
                    "two-vertex ring needs arc edges");
    // Orient: outer CCW (positive area), holes CW.
    const double area = ring.signed_area();
    SYMMLAB_REQUIRE(std::abs(area) > kGeomEps, "ring with vanishing area");
    const bool want_ccw = ring.orientation == RingOrientation::Outer;
    if ((area > 0.0) != want_ccw) {
      std::reverse(ring.vertices.begin(), ring.vertices.end());
      // Edge i (v_i -> v_{i+1}) becomes edge n-2-i after reversal...
      // except the closing edge n-1 which maps to itself.
      for (size_t k = 0; k < ring.arc_edges.size(); ++k) {
        const int old_i = ring.arc_edges[k];
        ring.arc_edges[k] = old_i == n - 1 ? n - 1 : n - 2 - old_i;
        ring.arc_ccw[k] = !ring.arc_ccw[k];
      }
    }
  }
  const double total = area();
  SYMMLAB_REQUIRE(total > kGeomEps && std::isfinite(total),
                  "polygon signed area must be positive and finite");
}

double PolygonSet::area() const {
  double a = 0.0;
  for (const Ring& r : rings_) a += r.signed_area();
  return a;
}

double PolygonSet::boundary_length() const {
  double len = 0.0;
  for (const Ring& r : rings_)
    for (int i = 0; i < r.edge_count(); ++i) len += r.edge(i).length();
  return len;
}

std::pair<double, double> PolygonSet::radial_extent() const {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const Ring& ring : rings_) {
    for (int i = 0; i < ring.edge_count(); ++i) {
      const Edge e = ring.edge(i);
      if (e.is_arc) {
        lo = std::min(lo, e.arc_radius());
        hi = std::max(hi, e.arc_radius());
      } else {
        lo = std::min({lo, norm(e.a), norm(e.b)});
        hi = std::max({hi, norm(e.a), norm(e.b)});
        // Interior closest approach of the segment to the origin.
        const Vec2 u = e.b - e.a;
        const double t = -dot(e.a, u) / norm2(u);
        if (t > 0.0 && t < 1.0) lo = std::min(lo, norm(e.a + t * u));
      }
    }
  }
  return {lo, hi};
}

std::pair<double, double> PolygonSet::x_extent() const {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const Ring& ring : rings_) {
    for (int i = 0; i < ring.edge_count(); ++i) {
      const Edge e = ring.edge(i);
      if (e.is_arc) {
        const double r = e.arc_radius();
        lo = std::min({lo, e.a.x, e.b.x});
        hi = std::max({hi, e.a.x, e.b.x});
        if (angle_in_arc(0.0, angle_of(e.a), angle_of(e.b), e.ccw)) hi = std::max(hi, r);
        if (angle_in_arc(kPi, angle_of(e.a), angle_of(e.b), e.ccw)) lo = std::min(lo, -r);
      } else {
        lo = std::min({lo, e.a.x, e.b.x});
        hi = std::max({hi, e.a.x, e.b.x});
      }
    }
  }
  return {lo, hi};
}

std::pair<double, double> PolygonSet::y_extent() const {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const Ring& ring : rings_) {
    for (int i = 0; i < ring.edge_count(); ++i) {
      const Edge e = ring.edge(i);
      lo = std::min({lo, e.a.y, e.b.y});
      hi = std::max({hi, e.a.y, e.b.y});
      if (e.is_arc) {
        const double r = e.arc_radius();
        if (angle_in_arc(kPi / 2, angle_of(e.a), angle_of(e.b), e.ccw)) hi = std::max(hi, r);
        if (angle_in_arc(-kPi / 2, angle_of(e.a), angle_of(e.b), e.ccw)) lo = std::min(lo, -r);
      }
    }
  }
  return {lo, hi};
}

namespace {

// One parity ray cast. Returns nullopt when the ray passes suspiciously
// close to a vertex, tangency or parallel edge; the caller retries with a
// rotated direction.
std::optional<bool> try_parity(const PolygonSet& P, Vec2 p, Vec2 d) {
  int crossings = 0;
  for (const Ring& ring : P.rings()) {
    for (int i = 0; i < ring.edge_count(); ++i) {
      const Edge e = ring.edge(i);
      if (!e.is_arc) {
        const Vec2 u = e.b - e.a;
        const double den = cross(d, u);
        const Vec2 w = e.a - p;
        if (std::abs(den) < 1e-14 * (1.0 + norm(u))) {
          // Parallel: reject only if the segment could lie on the ray.
          if (std::abs(cross(d, w)) < 1e-12 * (1.0 + norm(w))) return std::nullopt;
          continue;
        }
        const double t = -cross(d, w) / den;      // position on the edge
        const double s = cross(w, u) / den;       // distance along the ray
        if (t < -1e-13 || t > 1.0 + 1e-13 || s <= 0.0) continue;
        if (t < 1e-13 || t > 1.0 - 1e-13) return std::nullopt;  // vertex hit
        ++crossings;
      } else {
        const double r = e.arc_radius();
        double roots[2];
        const int nr = circle_line_roots(p, d, r, roots);
        if (nr == 1) return std::nullopt;  // ray tangent to the arc circle
        for (int k = 0; k < nr; ++k) {
          const double s = roots[k];
          if (s <= 0.0) continue;
          const Vec2 q = p + s * d;
          const double th = angle_of(q);
          const double th_a = angle_of(e.a), th_b = angle_of(e.b);
          const double d_end = std::min(std::abs(angle_diff(th, th_a)),
                                        std::abs(angle_diff(th, th_b)));
          if (d_end < 1e-13) return std::nullopt;  // arc endpoint hit
          if (angle_in_arc(th, th_a, th_b, e.ccw)) ++crossings;
        }
      }
    }
  }
  return (crossings % 2) == 1;
}

}  // namespace

bool PolygonSet::contains(Vec2 p) const {
  double phi = 0.577215664901532;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const auto res = try_parity(*this, p, {std::cos(phi), std::sin(phi)});
    if (res) return *res;
    phi += 0.123456789;
  }
  throw invariant_error("membership test failed to find a clean ray");
}

CircularSlice slice_circle(const PolygonSet& P, double r) {
  SYMMLAB_REQUIRE(r > 0.0, "slice_circle: radius must be positive");
  CircularSlice out;
  std::vector<SliceCrossing> cr;
  for (const Ring& ring : P.rings()) {
    for (int i = 0; i < ring.edge_count(); ++i) {
      const Edge e = ring.edge(i);
      if (e.is_arc) {
        // Origin-centered arcs are pieces of |x| = const: transversal
        // crossings never happen; radius coincidence is a tangency radius.
        if (std::abs(e.arc_radius() - r) < kGeomEps * (1.0 + r))
          out.degenerate = true;
        continue;
      }
      const Vec2 u = e.b - e.a;
      double roots[2];
      const int nr = circle_line_roots(e.a, u, r, roots);
      if (nr <= 1) continue;  // miss or tangency: no parity change
      for (int k = 0; k < 2; ++k) {
        const double t = roots[k];
        if (t <= 0.0 || t >= 1.0) continue;
        SliceCrossing c;
        c.at_vertex = t < 1e-10 || t > 1.0 - 1e-10;
        c.point = e.a + t * u;
        c.param = angle_of(c.point);
        c.inner_normal = left_normal(unit(u));
        cr.push_back(c);
      }
    }
  }
  std::sort(cr.begin(), cr.end(),
            [](const SliceCrossing& a, const SliceCrossing& b) {
              return a.param < b.param;
            });
  if (cr.empty()) {
    const bool inside = P.contains(from_polar(r, 0.391871));
    out.arcs = inside ? AngularArcSet::full_circle(r)
                      : AngularArcSet::empty_set(r);
    out.crossings = std::move(cr);
    return out;
  }
  std::vector<Arc> arcs;
  const int m = static_cast<int>(cr.size());
  for (int k = 0; k < m; ++k) {
    const double lo = cr[k].param;
    const double hi = k + 1 < m ? cr[k + 1].param : cr[0].param + kTwoPi;
    if (hi - lo < kAngleEps) continue;
    const double mid = 0.5 * (lo + hi);
    if (P.contains(from_polar(r, mid))) arcs.push_back({lo, hi});
  }
  out.arcs = AngularArcSet(r, std::move(arcs));
  out.crossings = std::move(cr);
  return out;
}

VerticalSlice slice_vertical(const PolygonSet& P, double x0) {
  VerticalSlice out;
  std::vector<SliceCrossing> cr;
  for (const Ring& ring : P.rings()) {
    for (int i = 0; i < ring.edge_count(); ++i) {
      const Edge e = ring.edge(i);
      if (!e.is_arc) {
        const double fa = e.a.x - x0, fb = e.b.x - x0;
        if (fa == 0.0 || fb == 0.0) {
          out.degenerate = true;  // vertex on the line
          continue;
        }
        if ((fa > 0.0) == (fb > 0.0)) continue;  // no sign change
        const double t = fa / (fa - fb);
        SliceCrossing c;
        c.at_vertex = t < 1e-10 || t > 1.0 - 1e-10;
        c.point = {x0, e.a.y + t * (e.b.y - e.a.y)};
        c.param = c.point.y;
        c.inner_normal = left_normal(unit(e.b - e.a));
        cr.push_back(c);
      } else {
        const double r = e.arc_radius();
        if (std::abs(x0) >= r) {
          if (std::abs(std::abs(x0) - r) < kGeomEps * (1.0 + r))
            out.degenerate = true;  // line tangent to the arc circle
          continue;
        }
        const double y = std::sqrt(r * r - x0 * x0);
        const double th_a = angle_of(e.a), th_b = angle_of(e.b);
        for (const double yy : {y, -y}) {
          const double th = angle_of(Vec2{x0, yy});
          if (!angle_in_arc(th, th_a, th_b, e.ccw)) continue;
          SliceCrossing c;
          c.point = {x0, yy};
          c.param = yy;
          // Inner normal of an origin arc is radial; traversal direction
          // decides the sign (interior to the left).
          const Vec2 xh = unit(c.point);
          c.inner_normal = e.ccw ? -xh : xh;
          cr.push_back(c);
        }
      }
    }
  }
  std::sort(cr.begin(), cr.end(),
            [](const SliceCrossing& a, const SliceCrossing& b) {
              return a.param < b.param;
            });
  std::vector<Interval> ivs;
  for (size_t k = 0; k + 1 < cr.size(); ++k) {
    const double lo = cr[k].param, hi = cr[k + 1].param;
    if (hi - lo < kAngleEps) continue;
    if (P.contains({x0, 0.5 * (lo + hi)})) ivs.push_back({lo, hi});
  }
  out.intervals = IntervalSet(std::move(ivs));
  out.crossings = std::move(cr);
  return out;
}

}  // namespace symmlab
