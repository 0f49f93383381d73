#include "symmlab/generators.hpp"

#include <cmath>
#include <random>

namespace symmlab {

namespace {

double param(const GeneratorParams& p, const std::string& key, double dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : it->second;
}

// Annular wedge {r0 < r < r1, th_lo < theta < th_hi} with exact arc edges.
Ring wedge_ring(double th_lo, double th_hi, double r0, double r1) {
  Ring ring;
  ring.orientation = RingOrientation::Outer;
  ring.vertices = {from_polar(r1, th_lo), from_polar(r1, th_hi),
                   from_polar(r0, th_hi), from_polar(r0, th_lo)};
  ring.arc_edges = {0, 2};
  ring.arc_ccw = {true, false};
  return ring;
}

Ring box_ring(double x0, double y0, double x1, double y1) {
  Ring ring;
  ring.orientation = RingOrientation::Outer;
  ring.vertices = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  return ring;
}

PolygonSet random_star_polygon(int n, unsigned seed) {
  std::mt19937_64 rng(0x5eedULL + seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const Vec2 c{2.2, 0.3};
  Ring ring;
  ring.orientation = RingOrientation::Outer;
  for (int k = 0; k < n; ++k) {
    const double jitter = 0.8 * (u01(rng) - 0.5);
    const double phi = kTwoPi * (k + 0.5 + jitter) / n;
    const double rho = 0.35 + 0.8 * u01(rng);
    ring.vertices.push_back(c + from_polar(rho, phi));
  }
  return PolygonSet({ring});
}

}  // namespace

bool is_known_fixture(const std::string& name) {
  static const char* names[] = {
      "half_disk",     "disk",          "wedge",          "rotated_wedge",
      "split_wedge",   "drifted_wedge", "twisted_band",   "sheared_square",
      "stacked_squares", "random_polygon"};
  for (const char* n : names)
    if (name == n) return true;
  return false;
}

SetSource make_fixture(const std::string& name, const GeneratorParams& p) {
  if (name == "half_disk") {
    const double R = param(p, "R", 1.0);
    Ring ring;
    ring.orientation = RingOrientation::Outer;
    ring.vertices = {{0.0, -R}, {0.0, R}};
    ring.arc_edges = {0};
    ring.arc_ccw = {true};
    return PolygonSet({ring});
  }
  if (name == "disk") {
    const double R = param(p, "R", 1.0);
    Ring ring;
    ring.orientation = RingOrientation::Outer;
    ring.vertices = {{R, 0.0}, {-R, 0.0}};
    ring.arc_edges = {0, 1};
    ring.arc_ccw = {true, true};
    return PolygonSet({ring});
  }
  const double alpha = param(p, "alpha", kPi / 3.0);
  const double r0 = param(p, "r0", 1.0);
  const double r1 = param(p, "r1", 2.0);
  if (name == "wedge")
    return PolygonSet({wedge_ring(-alpha / 2, alpha / 2, r0, r1)});
  if (name == "rotated_wedge") {
    const double beta = param(p, "beta", kPi / 4.0);
    return PolygonSet({wedge_ring(beta - alpha / 2, beta + alpha / 2, r0, r1)});
  }
  if (name == "split_wedge")
    return PolygonSet({wedge_ring(alpha / 4, 3 * alpha / 4, r0, r1),
                       wedge_ring(-3 * alpha / 4, -alpha / 4, r0, r1)});
  if (name == "drifted_wedge") {
    const double c = param(p, "c", 1.0);
    Box dom{r0, r1, 0.0, 0.0, false};
    return ArcFamilySet(dom, make_const_field(alpha),
                        make_linear_field(-c * r0, c, 0.0),
                        std::max(std::abs(c), 1e-12));
  }
  if (name == "twisted_band") {
    const double s = param(p, "s", 1.0);
    Box dom{r0, r1, param(p, "z0", 0.0), param(p, "z1", 1.0), true};
    return ArcFamilySet(dom, make_const_field(alpha),
                        make_linear_field(0.0, 0.0, s),
                        std::max(std::abs(s), 1e-12));
  }
  if (name == "sheared_square") {
    Ring ring;
    ring.orientation = RingOrientation::Outer;
    ring.vertices = {{0.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}, {0.0, 1.0}};
    return PolygonSet({ring});
  }
  if (name == "stacked_squares")
    return PolygonSet(
        {box_ring(0.0, 0.0, 1.0, 1.0), box_ring(0.0, 1.5, 1.0, 2.5)});
  if (name == "random_polygon") {
    const int n = static_cast<int>(param(p, "n", 16));
    const unsigned seed = static_cast<unsigned>(param(p, "seed", 0));
    SYMMLAB_REQUIRE(n >= 5, "random polygon needs n >= 5");
    return random_star_polygon(n, seed);
  }
  throw input_error("unknown fixture: " + name);
}

}  // namespace symmlab
