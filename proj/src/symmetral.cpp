#include "symmlab/symmetral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "symmlab/parallel.hpp"
#include "symmlab/slicing.hpp"

namespace symmlab {

ArcFamilySet build_F_mu(const GridFunction& mu, BvOptions bv) {
  SYMMLAB_REQUIRE(mu.mode == Mode::Circular, "build_F_mu needs circular mode");
  check_mu_compatibility(mu);
  const GridFunction xi = xi_from_mu(mu);
  const BvDecomposition dec = bv_decompose(xi, bv);
  std::vector<JumpWall> walls = dec.wall_positions();

  // Lipschitz bound of the interpolant: the largest smooth interface slope
  // in either direction, with a little slack.
  double L = 0.0;
  for (double g : dec.iface_grad1) L = std::max(L, std::abs(g));
  for (double g : dec.iface_grad2) L = std::max(L, std::abs(g));
  L = 1.0001 * L + 1e-12;

  Box box{mu.dom.lo1, mu.dom.hi1, mu.dom.lo2, mu.dom.hi2, mu.dom.has_axis2};
  return ArcFamilySet(box, make_grid_interpolant(xi, walls),
                      make_const_field(0.0), L, std::move(walls));
}

SliceGrid build_F_v(const GridFunction& v) {
  SYMMLAB_REQUIRE(v.mode == Mode::Steiner, "build_F_v needs steiner mode");
  SliceGrid g;
  g.dom = v.dom;
  g.mode = Mode::Steiner;
  g.line_cells.reserve(v.dom.cell_count());
  for (size_t c = 0; c < v.dom.cell_count(); ++c) {
    SYMMLAB_REQUIRE(v.values[c] >= -1e-12, "negative distribution value");
    g.line_cells.push_back(IntervalSet::centered(0.0, std::max(0.0, v.values[c])));
  }
  return g;
}

MonotoneReport monotone_check(const ArcFamilySet& F) {
  MonotoneReport rep;
  const Box& D = F.domain();
  const int m = 64;
  for (int j = 0; j < (D.has_axis2 ? m : 1); ++j) {
    for (int i = 0; i < m; ++i) {
      const double a = D.lo1 + (i + 0.5) * (D.hi1 - D.lo1) / m;
      const double b = D.has_axis2 ? D.lo2 + (j + 0.5) * (D.hi2 - D.lo2) / m : 0.0;
      const double w = F.xi(a, b);
      if (w < kAngleEps || w >= kTwoPi - kAngleEps) continue;
      if (std::abs(wrap_angle(F.theta_c(a, b))) > 1e-9) {
        rep.ok = false;
        rep.violation = "slice center off the positive x-axis";
        rep.at1 = a;
        rep.at2 = b;
        return rep;
      }
    }
  }
  return rep;
}

MonotoneReport monotone_check(const SliceGrid& F) {
  MonotoneReport rep;
  const int n2 = F.dom.has_axis2 ? F.dom.n2 : 1;
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < F.dom.n1; ++i) {
      rep.at1 = F.dom.center1(i);
      rep.at2 = F.dom.center2(j);
      if (F.mode == Mode::Circular) {
        const AngularArcSet& s = F.circ_at(i, j);
        if (s.empty() || s.full()) continue;
        if (s.component_count() > 1) {
          rep.ok = false;
          rep.violation = "slice has multiple arcs";
          return rep;
        }
        const Arc& a = s.arcs().front();
        if (std::abs(a.lo + a.hi) > 2e-9) {
          rep.ok = false;
          rep.violation = "slice arc not centered on the positive x-axis";
          return rep;
        }
      } else {
        const IntervalSet& s = F.line_at(i, j);
        if (s.empty()) continue;
        if (s.component_count() > 1) {
          rep.ok = false;
          rep.violation = "slice has multiple intervals";
          return rep;
        }
        const Interval& v = s.intervals().front();
        if (std::abs(v.lo + v.hi) > 2e-9 * std::max(1.0, v.hi - v.lo)) {
          rep.ok = false;
          rep.violation = "slice interval not centered at 0";
          return rep;
        }
      }
    }
  }
  return rep;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

DensityProfile density_profile(const ArcFamilySet& F, double r, double z,
                               const std::vector<double>& gammas,
                               const std::vector<double>& rho_schedule,
                               int n_samples, std::uint64_t seed) {
  const Box& D = F.domain();
  SYMMLAB_REQUIRE(D.contains(r, z), "density point outside domain");
  SYMMLAB_REQUIRE(!rho_schedule.empty() && n_samples > 0,
                  "density profile needs samples and radii");
  double dist = std::min(r - D.lo1, D.hi1 - r);
  if (D.has_axis2) dist = std::min({dist, z - D.lo2, D.hi2 - z});
  for (double rho : rho_schedule)
    SYMMLAB_REQUIRE(rho > 0.0 && rho < dist,
                    "rho too large for the domain interior");

  DensityProfile out;
  out.seed = seed;
  const size_t ng = gammas.size(), nr = rho_schedule.size();
  out.entries.resize(ng * nr);
  const bool k3 = D.has_axis2;

  parallel_for(ng * nr, [&](size_t task) {
    const size_t gi = task / nr, ri = task % nr;
    const double gamma = gammas[gi];
    const double rho = rho_schedule[ri];
    const Vec2 p = from_polar(r, gamma);
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(task + 1)));
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::int64_t hits = 0, total = 0;
    if (!k3) {
      // Stratified area-preserving map of the unit square onto the disk.
      const int m = static_cast<int>(std::ceil(std::sqrt(double(n_samples))));
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          const double u = (a + u01(rng)) / m;
          const double v = (b + u01(rng)) / m;
          const Vec2 q = p + from_polar(rho * std::sqrt(u), kTwoPi * v);
          ++total;
          hits += F.contains(q, z) ? 1 : 0;
        }
      }
    } else {
      // Jittered grid on the enclosing cube, rejecting points off the ball.
      const int m = static_cast<int>(std::ceil(std::cbrt(double(n_samples) * 6.0 / kPi)));
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          for (int c = 0; c < m; ++c) {
            const double dx = rho * (2.0 * (a + u01(rng)) / m - 1.0);
            const double dy = rho * (2.0 * (b + u01(rng)) / m - 1.0);
            const double dz = rho * (2.0 * (c + u01(rng)) / m - 1.0);
            if (dx * dx + dy * dy + dz * dz > rho * rho) continue;
            ++total;
            hits += F.contains({p.x + dx, p.y + dy}, z + dz) ? 1 : 0;
          }
        }
      }
    }
    DensityEstimate e;
    e.gamma = gamma;
    e.rho = rho;
    const double n = std::max<std::int64_t>(total, 1);
    e.estimate = double(hits) / n;
    e.stderr_est = std::sqrt(std::max(e.estimate * (1.0 - e.estimate), 1.0 / n) / n);
    out.entries[task] = e;
  });

  out.final_estimate.resize(ng);
  size_t smallest = 0;
  for (size_t ri = 1; ri < nr; ++ri)
    if (rho_schedule[ri] < rho_schedule[smallest]) smallest = ri;
  for (size_t gi = 0; gi < ng; ++gi)
    out.final_estimate[gi] = out.entries[gi * nr + smallest].estimate;
  return out;
}

}  // namespace symmlab
