#include "symmlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "symmlab/parallel.hpp"

namespace symmlab {

std::optional<CircNormal> bar_nu_F(const ArcFamilySet& F_mu, double r,
                                   double z) {
  if (!F_mu.domain().contains(r, z)) return std::nullopt;
  const double w = F_mu.xi(r, z);
  if (w < kAngleEps || w >= kTwoPi - kAngleEps) return std::nullopt;
  const double a = 0.5 * r * F_mu.xi_field().d1(r, z);
  const double c = F_mu.planar() ? 0.0 : 0.5 * r * F_mu.xi_field().d2(r, z);
  const double W = std::sqrt(1.0 + a * a + c * c);
  return CircNormal{a / W, 1.0 / W, c / W};
}

std::optional<CircNormal> bar_nu_F(const GridFunction& mu, double r, double z) {
  return bar_nu_F(build_F_mu(mu), r, z);
}

namespace {

// Full inner normal of one lateral graph theta_c +- xi/2 of an arc family;
// side = +1 for the upper graph, -1 for the lower.
BoundaryPoint arcfamily_endpoint(const ArcFamilySet& A, double r, double z,
                                 int side) {
  const double th = A.theta_c(r, z) + side * 0.5 * A.xi(r, z);
  const double tr = A.theta_c_field().d1(r, z) +
                    side * 0.5 * A.xi_field().d1(r, z);
  const double tz = A.planar() ? 0.0
                               : A.theta_c_field().d2(r, z) +
                                     side * 0.5 * A.xi_field().d2(r, z);
  const double W = std::sqrt(1.0 + r * r * tr * tr + r * r * tz * tz);
  const Vec2 e_r{std::cos(th), std::sin(th)};
  const Vec2 e_t{-std::sin(th), std::cos(th)};
  BoundaryPoint p;
  p.x = r * e_r;
  p.z = z;
  // Interior lies below the upper graph and above the lower one.
  p.nu_x = (1.0 / W) * (side * (r * tr) * e_r - side * e_t);
  p.nu_z = side * r * tz / W;
  p.circ = normal_to_circ(p.nu_x, p.nu_z, p.x);
  return p;
}

}  // namespace

std::vector<BoundaryPoint> boundary_normals(const SetSource& src, double r,
                                            double z) {
  std::vector<BoundaryPoint> out;
  if (const auto* P = std::get_if<PolygonSet>(&src)) {
    const CircularSlice s = slice_circle(*P, r);
    for (const SliceCrossing& c : s.crossings) {
      BoundaryPoint p;
      p.x = c.point;
      p.nu_x = c.inner_normal;
      p.nu_z = 0.0;
      p.circ = normal_to_circ(p.nu_x, 0.0, p.x);
      p.at_vertex = c.at_vertex || s.degenerate;
      out.push_back(p);
    }
    return out;
  }
  if (const auto* A = std::get_if<ArcFamilySet>(&src)) {
    if (!A->domain().contains(r, z)) return out;
    const double w = A->xi(r, z);
    if (w < kAngleEps || w >= kTwoPi - kAngleEps) return out;
    out.push_back(arcfamily_endpoint(*A, r, z, +1));
    out.push_back(arcfamily_endpoint(*A, r, z, -1));
    return out;
  }
  throw input_error("boundary normals are not defined for slice grids");
}

ConditionA check_condition_a(const SetSource& src, const Box& B,
                             int samples_per_axis, double tolerance_fraction) {
  ConditionA res;
  const bool k3 = B.has_axis2;
  const int n1 = samples_per_axis;
  const int n2 = k3 ? samples_per_axis : 1;
  std::vector<std::uint8_t> bad(static_cast<size_t>(n1) * n2, 0);
  parallel_for(bad.size(), [&](size_t idx) {
    const int i = static_cast<int>(idx % n1);
    const int j = static_cast<int>(idx / n1);
    const double r = B.lo1 + (i + 0.5) * (B.hi1 - B.lo1) / n1;
    const double z = k3 ? B.lo2 + (j + 0.5) * (B.hi2 - B.lo2) / n2 : 0.0;
    const AngularArcSet s = source_circular_slice(src, r, z);
    bad[idx] = s.component_count() >= 2 ? 1 : 0;
  });
  int nbad = 0;
  for (auto b : bad) nbad += b;
  res.slices_checked = static_cast<int>(bad.size());
  res.fraction = double(nbad) / double(bad.size());
  res.violating_measure = res.fraction * B.measure();
  res.pass = res.violating_measure <= tolerance_fraction * B.measure() +
                                          1e-30;
  return res;
}

ConditionB check_condition_b(const SetSource& src, const ArcFamilySet& F_mu,
                             const Box& B, double tol, int samples_per_axis,
                             int excision_budget) {
  ConditionB res;
  res.excision_budget = excision_budget;
  const bool k3 = B.has_axis2;
  const int n1 = samples_per_axis;
  const int n2 = k3 ? samples_per_axis : 1;
  struct SliceResult {
    double dev = -1.0;  // -1: not compared
    bool excised = false;
    double r = 0.0, z = 0.0;
  };
  std::vector<SliceResult> rows(static_cast<size_t>(n1) * n2);
  parallel_for(rows.size(), [&](size_t idx) {
    const int i = static_cast<int>(idx % n1);
    const int j = static_cast<int>(idx / n1);
    SliceResult sr;
    sr.r = B.lo1 + (i + 0.5) * (B.hi1 - B.lo1) / n1;
    sr.z = k3 ? B.lo2 + (j + 0.5) * (B.hi2 - B.lo2) / n2 : 0.0;
    const auto nubar = bar_nu_F(F_mu, sr.r, sr.z);
    const auto pts = boundary_normals(src, sr.r, sr.z);
    if (nubar && !pts.empty()) {
      for (const BoundaryPoint& p : pts) {
        if (p.at_vertex) {
          sr.excised = true;  // not a reduced-boundary point
          sr.dev = -1.0;
          break;
        }
        sr.dev = std::max(sr.dev, distance(p.circ, *nubar));
      }
    }
    rows[idx] = sr;
  });
  res.slices_checked = static_cast<int>(rows.size());
  for (const SliceResult& sr : rows) {
    if (sr.excised) {
      ++res.excised;
      continue;
    }
    if (sr.dev < 0.0) continue;
    ++res.slices_compared;
    res.max_deviation = std::max(res.max_deviation, sr.dev);
    if (sr.dev > tol) res.violating.push_back({sr.r, sr.z, sr.dev});
  }
  std::sort(res.violating.begin(), res.violating.end(),
            [](const auto& a, const auto& b) { return a[2] > b[2]; });
  if (res.violating.size() > 8) res.violating.resize(8);
  res.pass = res.excised <= excision_budget && res.max_deviation <= tol;
  return res;
}

namespace {

// Grid covering B with whole-cell padding on each side so that jumps at
// the region faces stay interior interfaces; faces stay aligned with cell
// interfaces.
GridDomain padded_domain(const Box& B, int n, bool k3) {
  GridDomain d;
  const double h1 = (B.hi1 - B.lo1) / n;
  const int pad1 = std::max(2, n / 8);
  const int klo = std::min<int>(pad1, static_cast<int>(std::floor(B.lo1 / h1)));
  d.lo1 = B.lo1 - klo * h1;
  d.hi1 = B.hi1 + pad1 * h1;
  d.n1 = n + klo + pad1;
  d.has_axis2 = k3;
  if (k3) {
    const double span2 = B.hi2 - B.lo2;
    const int n2 = std::max(8, static_cast<int>(std::lround(
                                   n * span2 / (B.hi1 - B.lo1))));
    const double h2 = span2 / n2;
    const int pad2 = std::max(2, n2 / 8);
    d.lo2 = B.lo2 - pad2 * h2;
    d.hi2 = B.hi2 + pad2 * h2;
    d.n2 = n2 + 2 * pad2;
  }
  return d;
}

}  // namespace

DiagnosticsReport verify_inequality(const SetSource& src, const Box& B,
                                    Closure cl, VerifyOptions opt) {
  SYMMLAB_REQUIRE(B.hi1 > B.lo1 && B.lo1 >= 0.0, "bad region");
  DiagnosticsReport rep;
  rep.mode = Mode::Circular;
  rep.region = B;
  rep.closure = cl;
  rep.seed = opt.seed;
  rep.n_q = opt.n_q;

  const bool k3 = B.has_axis2;
  const GridDomain dom = padded_domain(B, opt.grid_n, k3);
  rep.grid_n1 = dom.n1;
  rep.grid_n2 = dom.has_axis2 ? dom.n2 : 1;

  const GridFunction mu = distribution(src, dom, Mode::Circular);
  const SigmaMeasure sigma = sigma_measure(mu, Mode::Circular, opt.sigma);
  rep.warnings = sigma.warnings;
  rep.p_symmetral = total_variation(sigma, B, cl);
  rep.p_formula = perimeter_F_mu_formula(mu, B, cl, opt.sigma);

  const ArcFamilySet F = build_F_mu(mu, opt.sigma.bv);
  const QuadratureResult q = arcfamily_perimeter(F, B, cl, {opt.n_q, true});
  rep.p_quadrature = q.value;
  rep.quad_err = q.err_estimate;

  if (const auto* P = std::get_if<PolygonSet>(&src)) {
    rep.p_set = polygon_perimeter(*P, Mode::Circular, B, cl);
  } else if (const auto* A = std::get_if<ArcFamilySet>(&src)) {
    rep.p_set = arcfamily_perimeter(*A, B, cl, {opt.n_q, true}).value;
  } else {
    throw input_error("verify needs an exact or analytic source");
  }
  rep.gap = rep.p_set - rep.p_symmetral;

  const double h1 = dom.h1();
  rep.tolerance = opt.tol ? *opt.tol : std::max(1e-6, 10.0 * h1);
  const bool exact_source = std::holds_alternative<PolygonSet>(src) ||
                            std::holds_alternative<ArcFamilySet>(src);
  rep.b_tolerance = opt.b_tol ? *opt.b_tol : (exact_source ? 1e-6 : 10.0 * h1);

  rep.condition_a = check_condition_a(src, B, opt.diag_samples);
  const int budget =
      opt.excision_budget
          ? *opt.excision_budget
          : (std::holds_alternative<ArcFamilySet>(src)
                 ? 0
                 : std::max(1, opt.diag_samples * (k3 ? opt.diag_samples : 1) /
                                   100));
  rep.condition_b = check_condition_b(src, F, B, rep.b_tolerance,
                                      opt.diag_samples, budget);
  rep.equality = rep.gap <= rep.tolerance;

  SYMMLAB_CHECK(rep.gap >= -rep.tolerance,
                "symmetrisation inequality violated beyond tolerance");
  SYMMLAB_CHECK(rep.equality == (rep.condition_a.pass && rep.condition_b.pass),
                "equality verdict inconsistent with conditions a/b");
  return rep;
}

PropositionReport verify_symmetral_propositions(const GridFunction& mu,
                                                int n_checks, double tol) {
  PropositionReport rep;
  const ArcFamilySet F = build_F_mu(mu);
  const Box& D = F.domain();
  const bool k3 = D.has_axis2;
  const int n1 = k3 ? std::max(2, static_cast<int>(std::sqrt(double(n_checks))))
                    : n_checks;
  const int n2 = k3 ? (n_checks + n1 - 1) / n1 : 1;

  // Rotated copies for the covariance check.
  const double gammas[3] = {0.751, -1.31, kPi / 4};
  std::vector<ArcFamilySet> rotated;
  for (double g : gammas)
    rotated.emplace_back(D, F.xi_field().clone(), make_const_field(g),
                         F.lipschitz_bound(), F.walls());

  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) {
      const double r = D.lo1 + (i + 0.5) * (D.hi1 - D.lo1) / n1;
      const double z = k3 ? D.lo2 + (j + 0.5) * (D.hi2 - D.lo2) / n2 : 0.0;
      const double w = F.xi(r, z);
      if (w < kAngleEps || w >= kTwoPi - kAngleEps) continue;
      ++rep.slices_checked;
      const BoundaryPoint up = arcfamily_endpoint(F, r, z, +1);
      const BoundaryPoint lo = arcfamily_endpoint(F, r, z, -1);

      // (i) constancy of the circularised normal along the slice
      rep.max_dev_constancy =
          std::max(rep.max_dev_constancy, distance(up.circ, lo.circ));

      // (ii) rotation covariance: rotating the set rotates the planar
      // normal and keeps the vertical part
      for (size_t gi = 0; gi < rotated.size(); ++gi) {
        const BoundaryPoint upg = arcfamily_endpoint(rotated[gi], r, z, +1);
        const Vec2 expect = rotate(up.nu_x, gammas[gi]);
        const double dev = norm(upg.nu_x - expect) + std::abs(upg.nu_z - up.nu_z);
        rep.max_dev_rotation = std::max(rep.max_dev_rotation, dev);
      }

      // (iii) reflection symmetry across {x2 = 0}
      const double dev_ref = norm(lo.nu_x - reflect_x2(up.nu_x)) +
                             std::abs(lo.nu_z - up.nu_z);
      rep.max_dev_reflection = std::max(rep.max_dev_reflection, dev_ref);
    }
  }
  rep.pass = rep.max_dev_constancy <= tol && rep.max_dev_rotation <= tol &&
             rep.max_dev_reflection <= tol;
  return rep;
}

}  // namespace symmlab
