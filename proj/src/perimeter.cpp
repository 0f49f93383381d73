#include "symmlab/perimeter.hpp"

#include <algorithm>
#include <cmath>

#include "symmlab/circ_normal.hpp"
#include "symmlab/kernels.hpp"
#include "symmlab/parallel.hpp"

namespace symmlab {

namespace {

// Parameter breakpoints of a segment edge where |a + t u| crosses level c.
void radius_breakpoints(Vec2 a, Vec2 u, double c, std::vector<double>& ts) {
  const double A = norm2(u);
  const double B = dot(a, u);
  const double C = norm2(a) - c * c;
  const double disc = B * B - A * C;
  if (disc <= 0.0) return;
  const double sq = std::sqrt(disc);
  const double q = -(B + std::copysign(sq, B));
  for (double t : {q / A, q != 0.0 ? C / q : 0.0})
    if (t > 0.0 && t < 1.0) ts.push_back(t);
}

// Sub-arcs of an arc edge where f(theta) = r cos(theta) crosses level c.
void arc_x_breakpoints(const Edge& e, double c, std::vector<double>& ts) {
  const double r = e.arc_radius();
  if (std::abs(c) >= r) return;
  const double t0 = std::acos(c / r);
  const double th_a = angle_of(e.a);
  const double span = e.ccw ? e.arc_span() : -e.arc_span();
  for (double th : {t0, -t0}) {
    // th + 2 pi k inside the traversal interval [th_a, th_a + span]
    for (int k = -2; k <= 2; ++k) {
      const double cand = th + k * kTwoPi;
      const double t = (cand - th_a) / span;
      if (t > 0.0 && t < 1.0) ts.push_back(t);
    }
  }
}

double clip_edge_length(const Edge& e, Mode mode, const Box& B, Closure cl) {
  if (e.is_arc && mode == Mode::Circular) {
    const double r = e.arc_radius();
    const double tol = 1e-12 * (1.0 + r);
    return in_range_with_faces(r, B.lo1, B.hi1, cl.lo1, cl.hi1, tol)
               ? e.length()
               : 0.0;
  }
  std::vector<double> ts{0.0, 1.0};
  if (!e.is_arc) {
    const Vec2 u = e.b - e.a;
    if (mode == Mode::Circular) {
      radius_breakpoints(e.a, u, B.lo1, ts);
      radius_breakpoints(e.a, u, B.hi1, ts);
    } else {
      for (double c : {B.lo1, B.hi1}) {
        if (std::abs(u.x) > 0.0) {
          const double t = (c - e.a.x) / u.x;
          if (t > 0.0 && t < 1.0) ts.push_back(t);
        }
      }
    }
  } else {
    arc_x_breakpoints(e, B.lo1, ts);
    arc_x_breakpoints(e, B.hi1, ts);
  }
  std::sort(ts.begin(), ts.end());
  double len = 0.0;
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    const double tm = 0.5 * (ts[k] + ts[k + 1]);
    const Vec2 p = e.point(tm);
    const double coord = mode == Mode::Circular ? norm(p) : p.x;
    if (coord > B.lo1 && coord < B.hi1)
      len += e.length() * (ts[k + 1] - ts[k]);
  }
  return len;
}

}  // namespace

double polygon_perimeter(const PolygonSet& P, Mode mode, const Box& B,
                         Closure cl) {
  SYMMLAB_REQUIRE(B.hi1 > B.lo1, "empty clipping band");
  std::vector<double> terms;
  for (const Ring& ring : P.rings())
    for (int i = 0; i < ring.edge_count(); ++i)
      terms.push_back(clip_edge_length(ring.edge(i), mode, B, cl));
  return pairwise_sum(terms);
}

// ---------------------------------------------------------------------------
// Arc family quadrature
// ---------------------------------------------------------------------------

namespace {

struct Panel {
  double lo = 0.0, hi = 0.0;
};

// Split [lo, hi] at interior wall coordinates.
std::vector<Panel> split_panels(double lo, double hi,
                                const std::vector<double>& cuts) {
  std::vector<double> edges{lo};
  std::vector<double> sorted = cuts;
  std::sort(sorted.begin(), sorted.end());
  for (double c : sorted)
    if (c > lo + 1e-14 && c < hi - 1e-14) edges.push_back(c);
  edges.push_back(hi);
  std::vector<Panel> out;
  for (size_t k = 0; k + 1 < edges.size(); ++k)
    if (edges[k + 1] - edges[k] > 1e-14) out.push_back({edges[k], edges[k + 1]});
  return out;
}

// Angular symmetric difference of the one-sided slices at a wall,
// integrated transversally; empty outside the domain box.
AngularArcSet side_slice(const ArcFamilySet& A, double r, double z, int s1,
                         int s2) {
  const Box& D = A.domain();
  const double t1 = 1e-12 * (1.0 + std::abs(r));
  const double t2 = 1e-12 * (1.0 + std::abs(z));
  const bool inside1 = s1 < 0 ? r > D.lo1 + t1 && r <= D.hi1 + t1
                              : r >= D.lo1 - t1 && r < D.hi1 - t1;
  const bool inside2 = !D.has_axis2 ||
                       (s2 < 0 ? z > D.lo2 + t2 && z <= D.hi2 + t2
                               : z >= D.lo2 - t2 && z < D.hi2 - t2);
  if (!inside1 || !inside2) return AngularArcSet::empty_set(std::max(r, 1e-300));
  const double w =
      std::clamp(A.xi_field().eval_side(r, z, s1, s2), 0.0, kTwoPi);
  if (w < kAngleEps) return AngularArcSet::empty_set(r);
  if (w >= kTwoPi - kAngleEps) return AngularArcSet::full_circle(r);
  const double c = A.theta_c_field().eval_side(r, z, s1, s2);
  return AngularArcSet::centered(r, c, w);
}

double wall_span_r(const ArcFamilySet& A, double pos, double z) {
  return symmetric_difference_measure(side_slice(A, pos, z, -1, +1),
                                      side_slice(A, pos, z, +1, +1));
}

double wall_span_z(const ArcFamilySet& A, double r, double pos) {
  return symmetric_difference_measure(side_slice(A, r, pos, +1, -1),
                                      side_slice(A, r, pos, +1, +1));
}

// Midpoint lattice term of the two lateral graphs, per z-row; SIMD kernel
// per row, deterministic pairwise reduction over rows.
double lateral_integral(const ArcFamilySet& A, const std::vector<Panel>& pr,
                        const std::vector<Panel>& pz, int n_q, double L) {
  const double span_r_total = [&] {
    double s = 0.0;
    for (const Panel& p : pr) s += p.hi - p.lo;
    return s;
  }();
  if (span_r_total <= 0.0) return 0.0;
  std::vector<double> panel_sums;
  const double lip_tol = L * 1.02 + 1e-9;
  for (const Panel& zpanel : pz) {
    for (const Panel& rpanel : pr) {
      const int nr = std::max(
          4, static_cast<int>(std::lround(n_q * (rpanel.hi - rpanel.lo) /
                                          span_r_total)));
      const int nz = A.planar()
                         ? 1
                         : std::max(4, static_cast<int>(std::lround(
                                           n_q * (zpanel.hi - zpanel.lo) /
                                           (pz.back().hi - pz.front().lo))));
      const double hr = (rpanel.hi - rpanel.lo) / nr;
      const double hz = A.planar() ? 1.0 : (zpanel.hi - zpanel.lo) / nz;
      std::vector<double> row_sums(nz, 0.0);
      std::atomic<bool> lips_ok{true};
      parallel_for(static_cast<size_t>(nz), [&](size_t jz) {
        const double z = A.planar() ? 0.0 : zpanel.lo + (jz + 0.5) * hz;
        std::vector<double> xp(nr), yp(nr), xm(nr), ym(nr), wp(nr), wm(nr),
            mask(nr);
        for (int i = 0; i < nr; ++i) {
          const double r = rpanel.lo + (i + 0.5) * hr;
          const double w = A.xi(r, z);
          const bool lateral = w >= kAngleEps && w < kTwoPi - kAngleEps;
          mask[i] = lateral ? 1.0 : 0.0;
          const double xr = A.xi_field().d1(r, z);
          const double xz = A.planar() ? 0.0 : A.xi_field().d2(r, z);
          const double cr = A.theta_c_field().d1(r, z);
          const double cz = A.planar() ? 0.0 : A.theta_c_field().d2(r, z);
          if (std::max({std::abs(xr), std::abs(xz), std::abs(cr),
                        std::abs(cz)}) > lip_tol)
            lips_ok = false;
          xp[i] = r * (cr + 0.5 * xr);
          yp[i] = r * (cz + 0.5 * xz);
          xm[i] = r * (cr - 0.5 * xr);
          ym[i] = r * (cz - 0.5 * xz);
        }
        kernels::graph_area_element(xp.data(), yp.data(), wp.data(), nr);
        kernels::graph_area_element(xm.data(), ym.data(), wm.data(), nr);
        for (int i = 0; i < nr; ++i) wp[i] = (wp[i] + wm[i]) * mask[i];
        row_sums[jz] = pairwise_sum(wp) * hr * hz;
      });
      SYMMLAB_REQUIRE(lips_ok.load(),
                      "sampled field slope exceeds the declared Lipschitz "
                      "bound; quadrature untrustworthy");
      panel_sums.push_back(pairwise_sum(row_sums));
    }
  }
  return pairwise_sum(panel_sums);
}

double quad_once(const ArcFamilySet& A, const Box& B, Closure cl, int n_q) {
  const Box& D = A.domain();
  const double lo1 = std::max(B.lo1, D.lo1), hi1 = std::min(B.hi1, D.hi1);
  const double lo2 = D.has_axis2 ? std::max(B.has_axis2 ? B.lo2 : D.lo2, D.lo2)
                                 : 0.0;
  const double hi2 = D.has_axis2 ? std::min(B.has_axis2 ? B.hi2 : D.hi2, D.hi2)
                                 : 0.0;
  if (hi1 <= lo1 || (D.has_axis2 && hi2 <= lo2)) return 0.0;

  std::vector<double> rcuts, zcuts;
  for (const JumpWall& w : A.walls())
    (w.axis == 0 ? rcuts : zcuts).push_back(w.pos);
  const std::vector<Panel> pr = split_panels(lo1, hi1, rcuts);
  const std::vector<Panel> pz = D.has_axis2 ? split_panels(lo2, hi2, zcuts)
                                            : std::vector<Panel>{{0.0, 1.0}};

  std::vector<double> terms;
  terms.push_back(lateral_integral(A, pr, pz, n_q, A.lipschitz_bound()));

  // Wall terms: declared jumps plus domain edges (outside is empty).
  std::vector<double> rwalls = rcuts, zwalls = zcuts;
  rwalls.push_back(D.lo1);
  rwalls.push_back(D.hi1);
  if (D.has_axis2) {
    zwalls.push_back(D.lo2);
    zwalls.push_back(D.hi2);
  }
  const double tol1 = 1e-9 * (B.hi1 - B.lo1);
  for (double pos : rwalls) {
    if (!in_range_with_faces(pos, B.lo1, B.hi1, cl.lo1, cl.hi1, tol1)) continue;
    if (!A.planar()) {
      const int nz = std::max(8, n_q);
      const double hz = (hi2 - lo2) / nz;
      std::vector<double> vals(nz);
      parallel_for(static_cast<size_t>(nz), [&](size_t j) {
        vals[j] = wall_span_r(A, pos, lo2 + (j + 0.5) * hz);
      });
      terms.push_back(pairwise_sum(vals) * hz);
    } else {
      terms.push_back(wall_span_r(A, pos, 0.0));
    }
  }
  if (D.has_axis2) {
    const double tol2 = 1e-9 * (hi2 - lo2 + 1.0);
    const double blo2 = B.has_axis2 ? B.lo2 : D.lo2;
    const double bhi2 = B.has_axis2 ? B.hi2 : D.hi2;
    for (double pos : zwalls) {
      if (!in_range_with_faces(pos, blo2, bhi2, cl.lo2, cl.hi2, tol2)) continue;
      const int nr = std::max(8, n_q);
      const double hr = (hi1 - lo1) / nr;
      std::vector<double> vals(nr);
      parallel_for(static_cast<size_t>(nr), [&](size_t i) {
        vals[i] = wall_span_z(A, lo1 + (i + 0.5) * hr, pos);
      });
      terms.push_back(pairwise_sum(vals) * hr);
    }
  }
  return pairwise_sum(terms);
}

}  // namespace

QuadratureResult arcfamily_perimeter(const ArcFamilySet& A, const Box& B,
                                     Closure cl, QuadratureOptions q) {
  SYMMLAB_REQUIRE(q.n_q >= 4, "quadrature resolution too small");
  QuadratureResult res;
  res.coarse = quad_once(A, B, cl, q.n_q);
  if (q.refine) {
    res.value = quad_once(A, B, cl, 2 * q.n_q);
    res.err_estimate = std::abs(res.value - res.coarse);
  } else {
    res.value = res.coarse;
  }
  return res;
}

double perimeter_F_mu_formula(const GridFunction& mu, const Box& B, Closure cl,
                              SigmaOptions opt) {
  // The discrete ac integrand 2 sqrt(1 + |r xi_r|^2/4 + |mu_z|^2/4) equals
  // |(r xi_r, 2, mu_z)| cellwise and the jump masses carry the local r, so
  // the evaluation is exactly the total variation of sigma_mu.
  return total_variation(sigma_measure(mu, Mode::Circular, opt), B, cl);
}

// ---------------------------------------------------------------------------
// Coarea identity
// ---------------------------------------------------------------------------

CoareaFunction coarea_g_one() {
  return {"1", [](double) { return 1.0; }, [](double r) { return r; }};
}
CoareaFunction coarea_g_r() {
  return {"r", [](double r) { return r; }, [](double r) { return 0.5 * r * r; }};
}
CoareaFunction coarea_g_sin() {
  return {"sin", [](double r) { return std::sin(r); },
          [](double r) { return -std::cos(r); }};
}
CoareaFunction coarea_g_zero() {
  return {"0", [](double) { return 0.0; }, [](double) { return 0.0; }};
}

namespace {

// Exact integral of g(|x|) |nu_par| over one segment edge inside the open
// band: with arc length s along the edge and d = distance of the line to
// the origin, |x| dr = s ds, so the integrand reduces to g(w) dw over each
// radius-monotone piece.
double coarea_lhs_edge(const Edge& e, const CoareaFunction& g, const Box& B) {
  if (e.is_arc) return 0.0;  // radial normal: |nu_par| = 0
  const Vec2 u = e.b - e.a;
  std::vector<double> ts{0.0, 1.0};
  radius_breakpoints(e.a, u, B.lo1, ts);
  radius_breakpoints(e.a, u, B.hi1, ts);
  const double tmin = -dot(e.a, u) / norm2(u);  // closest approach
  if (tmin > 0.0 && tmin < 1.0) ts.push_back(tmin);
  std::sort(ts.begin(), ts.end());
  double total = 0.0;
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    const double r0 = norm(e.a + ts[k] * u);
    const double r1 = norm(e.a + ts[k + 1] * u);
    const double rm = norm(e.a + 0.5 * (ts[k] + ts[k + 1]) * u);
    if (rm <= B.lo1 || rm >= B.hi1) continue;
    total += std::abs(g.G(std::max(r0, r1)) - g.G(std::min(r0, r1)));
  }
  return total;
}

}  // namespace

CoareaResult coarea_check(const PolygonSet& P, const CoareaFunction& g,
                          const Box& B) {
  CoareaResult res;
  std::vector<double> lhs_terms;
  std::vector<double> crit{B.lo1, B.hi1};
  for (const Ring& ring : P.rings()) {
    for (int i = 0; i < ring.edge_count(); ++i) {
      const Edge e = ring.edge(i);
      lhs_terms.push_back(coarea_lhs_edge(e, g, B));
      if (e.is_arc) {
        crit.push_back(e.arc_radius());
        crit.push_back(norm(e.a));
      } else {
        crit.push_back(norm(e.a));
        crit.push_back(norm(e.b));
        const Vec2 u = e.b - e.a;
        const double tmin = -dot(e.a, u) / norm2(u);
        if (tmin > 0.0 && tmin < 1.0) crit.push_back(norm(e.a + tmin * u));
      }
    }
  }
  res.lhs = pairwise_sum(lhs_terms);

  // Slice endpoint counts are piecewise constant between critical radii:
  // integrate g exactly on each piece.
  std::sort(crit.begin(), crit.end());
  std::vector<double> rhs_terms;
  for (size_t k = 0; k + 1 < crit.size(); ++k) {
    const double lo = std::max(crit[k], B.lo1);
    const double hi = std::min(crit[k + 1], B.hi1);
    if (hi - lo < 1e-13) continue;
    const double rm = 0.5 * (lo + hi);
    if (rm <= B.lo1 || rm >= B.hi1 || rm <= 0.0) continue;
    const auto slice = slice_circle(P, rm);
    const double count = static_cast<double>(slice.crossings.size());
    rhs_terms.push_back(count * (g.G(hi) - g.G(lo)));
  }
  res.rhs = pairwise_sum(rhs_terms);
  res.gap = std::abs(res.lhs - res.rhs);
  return res;
}

// ---------------------------------------------------------------------------
// Boundary integral of phi . nu_c (pairing inequality right-hand side)
// ---------------------------------------------------------------------------

namespace {

// 16-point Gauss-Legendre nodes/weights on [0, 1].
constexpr int kGauss = 16;
constexpr double kGx[kGauss] = {
    0.0052995325041750, 0.0277124884633837, 0.0671843988060841,
    0.1222977958224985, 0.1910618777986781, 0.2709916111713863,
    0.3591982246103705, 0.4524937450811813, 0.5475062549188187,
    0.6408017753896295, 0.7290083888286137, 0.8089381222013219,
    0.8777022041775015, 0.9328156011939159, 0.9722875115366163,
    0.9947004674958250};
constexpr double kGw[kGauss] = {
    0.0135762297058770, 0.0311267619693239, 0.0475792558412464,
    0.0623144856277669, 0.0747979944082884, 0.0845782596975013,
    0.0913017075224618, 0.0947253052275343, 0.0947253052275343,
    0.0913017075224618, 0.0845782596975013, 0.0747979944082884,
    0.0623144856277669, 0.0475792558412464, 0.0311267619693239,
    0.0135762297058770};

}  // namespace

double boundary_integral_circ(
    const PolygonSet& P,
    const std::function<std::array<double, 3>(double)>& phi, const Box& B,
    Closure cl) {
  std::vector<double> terms;
  for (const Ring& ring : P.rings()) {
    for (int i = 0; i < ring.edge_count(); ++i) {
      const Edge e = ring.edge(i);
      if (e.is_arc) {
        const double r = e.arc_radius();
        const double tol = 1e-12 * (1.0 + r);
        if (!in_range_with_faces(r, B.lo1, B.hi1, cl.lo1, cl.hi1, tol))
          continue;
        // nu = -x_hat (ccw outer side) or +x_hat; nu_c = (+-1, 0, 0).
        const double radial = e.ccw ? -1.0 : 1.0;
        terms.push_back(phi(r)[0] * radial * e.length());
        continue;
      }
      const Vec2 u = e.b - e.a;
      const Vec2 nu = left_normal(unit(u));
      std::vector<double> ts{0.0, 1.0};
      radius_breakpoints(e.a, u, B.lo1, ts);
      radius_breakpoints(e.a, u, B.hi1, ts);
      std::sort(ts.begin(), ts.end());
      for (size_t k = 0; k + 1 < ts.size(); ++k) {
        const double t0 = ts[k], t1 = ts[k + 1];
        const double rm = norm(e.a + 0.5 * (t0 + t1) * u);
        if (rm <= B.lo1 || rm >= B.hi1) continue;
        double piece = 0.0;
        for (int q = 0; q < kGauss; ++q) {
          const double t = t0 + (t1 - t0) * kGx[q];
          const Vec2 x = e.a + t * u;
          const CircNormal nc = normal_to_circ(nu, 0.0, x);
          const auto ph = phi(norm(x));
          piece += kGw[q] * (ph[0] * nc.radial + ph[1] * nc.tangential);
        }
        terms.push_back(piece * (t1 - t0) * norm(u));
      }
    }
  }
  return pairwise_sum(terms);
}

}  // namespace symmlab
