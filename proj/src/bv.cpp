#include "symmlab/bv.hpp"

#include <algorithm>
#include <cmath>

#include "symmlab/kernels.hpp"
#include "symmlab/parallel.hpp"
#include "symmlab/slicing.hpp"

namespace symmlab {

namespace {

double median5(const std::vector<double>& d, int i) {
  const int n = static_cast<int>(d.size());
  const int lo = std::max(0, i - 2);
  const int hi = std::min(n - 1, i + 2);
  double w[5];
  int m = 0;
  for (int k = lo; k <= hi; ++k) w[m++] = std::abs(d[k]);
  std::sort(w, w + m);
  return m % 2 ? w[m / 2] : 0.5 * (w[m / 2 - 1] + w[m / 2]);
}

// One grid line: differences -> jump flags + interface slopes.
void decompose_line(const std::vector<double>& f, double h, const BvOptions& opt,
                    std::vector<double>& iface, std::vector<char>& is_jump) {
  const int n = static_cast<int>(f.size());
  std::vector<double> d(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    SYMMLAB_REQUIRE(std::isfinite(f[i]) && std::isfinite(f[i + 1]),
                    "bv_decompose: non-finite values");
    d[i] = f[i + 1] - f[i];
  }
  iface.assign(n - 1, 0.0);
  is_jump.assign(n - 1, 0);
  for (int i = 0; i + 1 < n; ++i) {
    const double floor_eps =
        1e-12 * std::max({1.0, std::abs(f[i]), std::abs(f[i + 1])});
    const double thr = opt.absolute_threshold
                           ? *opt.absolute_threshold
                           : opt.median_multiplier * median5(d, i);
    if (std::abs(d[i]) > std::max(thr, floor_eps)) {
      is_jump[i] = 1;
    } else {
      iface[i] = d[i] / h;
    }
  }
}

}  // namespace

std::vector<JumpWall> BvDecomposition::wall_positions() const {
  std::vector<JumpWall> walls;
  std::vector<char> seen1(std::max(0, dom.n1 - 1), 0);
  std::vector<char> seen2(dom.has_axis2 ? std::max(0, dom.n2 - 1) : 0, 0);
  for (const GridJump& jp : jumps) {
    if (jp.axis == 0 && !seen1[jp.i]) {
      seen1[jp.i] = 1;
      walls.push_back({0, jp.pos});
    } else if (jp.axis == 1 && !seen2[jp.j]) {
      seen2[jp.j] = 1;
      walls.push_back({1, jp.pos});
    }
  }
  return walls;
}

BvDecomposition bv_decompose(const GridFunction& f, BvOptions opt) {
  f.dom.validate();
  BvDecomposition dec;
  dec.dom = f.dom;
  const int n1 = f.dom.n1;
  const int n2 = f.dom.has_axis2 ? f.dom.n2 : 1;
  dec.cell_grad1.assign(f.dom.cell_count(), 0.0);
  dec.cell_grad2.assign(f.dom.cell_count(), 0.0);
  dec.iface_grad1.assign(static_cast<size_t>(std::max(0, n1 - 1)) * n2, 0.0);
  if (f.dom.has_axis2)
    dec.iface_grad2.assign(static_cast<size_t>(n1) * std::max(0, n2 - 1), 0.0);

  // Axis 1, line by line.
  std::vector<double> line(n1), iface;
  std::vector<char> jumpflag;
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) line[i] = f.at(i, j);
    if (n1 >= 2) {
      decompose_line(line, f.dom.h1(), opt, iface, jumpflag);
      for (int i = 0; i + 1 < n1; ++i) {
        dec.iface_grad1[static_cast<size_t>(j) * (n1 - 1) + i] = iface[i];
        if (jumpflag[i])
          dec.jumps.push_back({0, i, j, f.dom.interface1(i),
                               f.dom.center2(j), line[i + 1] - line[i]});
      }
      for (int i = 0; i < n1; ++i) {
        const bool has_l = i > 0 && !jumpflag[i - 1];
        const bool has_r = i + 1 < n1 && !jumpflag[i];
        double g = 0.0;
        int cnt = 0;
        if (has_l) { g += iface[i - 1]; ++cnt; }
        if (has_r) { g += iface[i]; ++cnt; }
        dec.cell_grad1[f.dom.index(i, j)] = cnt ? g / cnt : 0.0;
      }
    }
  }

  // Axis 2, column by column.
  if (f.dom.has_axis2 && n2 >= 2) {
    std::vector<double> col(n2);
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n2; ++j) col[j] = f.at(i, j);
      decompose_line(col, f.dom.h2(), opt, iface, jumpflag);
      for (int j = 0; j + 1 < n2; ++j) {
        dec.iface_grad2[static_cast<size_t>(j) * n1 + i] = iface[j];
        if (jumpflag[j])
          dec.jumps.push_back({1, i, j, f.dom.interface2(j),
                               f.dom.center1(i), col[j + 1] - col[j]});
      }
      for (int j = 0; j < n2; ++j) {
        const bool has_l = j > 0 && !jumpflag[j - 1];
        const bool has_r = j + 1 < n2 && !jumpflag[j];
        double g = 0.0;
        int cnt = 0;
        if (has_l) { g += iface[j - 1]; ++cnt; }
        if (has_r) { g += iface[j]; ++cnt; }
        dec.cell_grad2[f.dom.index(i, j)] = cnt ? g / cnt : 0.0;
      }
    }
  }
  return dec;
}

double reconstruction_gap(const GridFunction& f, const BvDecomposition& dec,
                          int axis, int line) {
  const int n1 = f.dom.n1;
  const int n2 = f.dom.has_axis2 ? f.dom.n2 : 1;
  double sum = 0.0;
  if (axis == 0) {
    for (int i = 0; i + 1 < n1; ++i) sum += dec.iface1(i, line) * f.dom.h1();
    for (const GridJump& jp : dec.jumps)
      if (jp.axis == 0 && jp.j == line) sum += jp.delta;
    return std::abs(sum - (f.at(n1 - 1, line) - f.at(0, line)));
  }
  SYMMLAB_REQUIRE(f.dom.has_axis2, "axis 2 reconstruction needs a 2-D grid");
  for (int j = 0; j + 1 < n2; ++j) sum += dec.iface2(line, j) * f.dom.h2();
  for (const GridJump& jp : dec.jumps)
    if (jp.axis == 1 && jp.i == line) sum += jp.delta;
  return std::abs(sum - (f.at(line, n2 - 1) - f.at(line, 0)));
}

SigmaMeasure sigma_measure(const GridFunction& f, Mode mode, SigmaOptions opt) {
  SYMMLAB_REQUIRE(f.mode == mode, "sigma_measure: grid function mode mismatch");
  SigmaMeasure s;
  s.mode = mode;
  s.dom = f.dom;
  s.source = f;
  const int n1 = f.dom.n1;
  const int n2 = f.dom.has_axis2 ? f.dom.n2 : 1;
  s.ac.assign(f.dom.cell_count(), {0.0, 0.0, 0.0});
  s.support.assign(f.dom.cell_count(), 0);
  s.full_slice.assign(f.dom.cell_count(), 0);

  if (mode == Mode::Circular) {
    check_mu_compatibility(f);
    s.lebesgue_slot = 1;
    const GridFunction xi = xi_from_mu(f);
    const BvDecomposition dxi = bv_decompose(xi, opt.bv);
    const BvDecomposition dmu =
        f.dom.has_axis2 ? bv_decompose(f, opt.bv) : BvDecomposition{};
    s.dec = dxi;
    int full_cells = 0;
    for (int j = 0; j < n2; ++j) {
      for (int i = 0; i < n1; ++i) {
        const size_t c = f.dom.index(i, j);
        const double r = f.dom.center1(i);
        const double m = f.at(i, j);
        const bool full = m >= kTwoPi * r * (1.0 - kFullSlack);
        const bool pos = m > kPosEps;
        s.full_slice[c] = full;
        full_cells += full;
        const bool in_support = pos && (opt.literal_sigma || !full);
        s.support[c] = in_support;
        s.ac[c][0] = r * dxi.cell_grad1[c];
        s.ac[c][1] = in_support ? 2.0 : 0.0;
        s.ac[c][2] = f.dom.has_axis2 ? dmu.cell_grad2[c] : 0.0;
      }
    }
    if (full_cells > 0 && !opt.literal_sigma)
      s.warnings.push_back(
          "full slices (mu = 2*pi*r) on " + std::to_string(full_cells) +
          " cells excluded from the support indicator; "
          "|sigma| would overshoot the symmetral perimeter there "
          "(use literal-sigma to keep them)");
    for (const GridJump& jp : dxi.jumps) {
      if (jp.axis != 0) continue;
      SigmaAtom a;
      a.axis = 0;
      a.pos = jp.pos;
      a.other_lo = f.dom.has_axis2 ? f.dom.interface2(jp.j - 1) : 0.0;
      a.other_hi = f.dom.has_axis2 ? f.dom.interface2(jp.j) : 0.0;
      const double seg = f.dom.has_axis2 ? f.dom.h2() : 1.0;
      a.weight[0] = jp.pos * jp.delta * seg;  // r * D^s_r xi
      s.atoms.push_back(a);
    }
    if (f.dom.has_axis2) {
      for (const GridJump& jp : dmu.jumps) {
        if (jp.axis != 1) continue;
        SigmaAtom a;
        a.axis = 1;
        a.pos = jp.pos;
        a.other_lo = f.dom.interface1(jp.i - 1);
        a.other_hi = f.dom.interface1(jp.i);
        a.weight[2] = jp.delta * f.dom.h1();  // D^s_z mu
        s.atoms.push_back(a);
      }
    }
  } else {
    s.lebesgue_slot = f.dom.has_axis2 ? 2 : 1;
    for (double v : f.values)
      SYMMLAB_REQUIRE(v >= -1e-12, "steiner distribution must be nonnegative");
    const BvDecomposition dv = bv_decompose(f, opt.bv);
    s.dec = dv;
    for (int j = 0; j < n2; ++j) {
      for (int i = 0; i < n1; ++i) {
        const size_t c = f.dom.index(i, j);
        const bool pos = f.at(i, j) > kPosEps;
        s.support[c] = pos;
        s.ac[c][0] = dv.cell_grad1[c];
        if (f.dom.has_axis2) {
          s.ac[c][1] = dv.cell_grad2[c];
          s.ac[c][2] = pos ? 2.0 : 0.0;
        } else {
          s.ac[c][1] = pos ? 2.0 : 0.0;
        }
      }
    }
    for (const GridJump& jp : dv.jumps) {
      SigmaAtom a;
      a.axis = jp.axis;
      a.pos = jp.pos;
      if (jp.axis == 0) {
        a.other_lo = f.dom.has_axis2 ? f.dom.interface2(jp.j - 1) : 0.0;
        a.other_hi = f.dom.has_axis2 ? f.dom.interface2(jp.j) : 0.0;
        a.weight[0] = jp.delta * (f.dom.has_axis2 ? f.dom.h2() : 1.0);
      } else {
        a.other_lo = f.dom.interface1(jp.i - 1);
        a.other_hi = f.dom.interface1(jp.i);
        a.weight[1] = jp.delta * f.dom.h1();
      }
      s.atoms.push_back(a);
    }
  }
  return s;
}

namespace {

void require_box_in_domain(const GridDomain& dom, const Box& B) {
  const double t1 = 1e-9 * (dom.hi1 - dom.lo1);
  SYMMLAB_REQUIRE(B.lo1 >= dom.lo1 - t1 && B.hi1 <= dom.hi1 + t1,
                  "box outside domain (axis 1)");
  if (dom.has_axis2 && B.has_axis2) {
    const double t2 = 1e-9 * (dom.hi2 - dom.lo2);
    SYMMLAB_REQUIRE(B.lo2 >= dom.lo2 - t2 && B.hi2 <= dom.hi2 + t2,
                    "box outside domain (axis 2)");
  }
}

// Transverse fraction of an atom segment inside the box (1 for k = 2).
double atom_overlap(const SigmaMeasure& s, const SigmaAtom& a, const Box& B) {
  if (!s.dom.has_axis2) return 1.0;
  const double blo = a.axis == 0 ? (B.has_axis2 ? B.lo2 : s.dom.lo2)
                                 : B.lo1;
  const double bhi = a.axis == 0 ? (B.has_axis2 ? B.hi2 : s.dom.hi2)
                                 : B.hi1;
  const double lo = std::max(a.other_lo, blo);
  const double hi = std::min(a.other_hi, bhi);
  if (hi <= lo) return 0.0;
  return (hi - lo) / (a.other_hi - a.other_lo);
}

bool atom_pos_in_box(const SigmaMeasure& s, const SigmaAtom& a, const Box& B,
                     Closure cl) {
  if (a.axis == 0) {
    const double tol = 1e-9 * s.dom.h1();
    return in_range_with_faces(a.pos, B.lo1, B.hi1, cl.lo1, cl.hi1, tol);
  }
  const double tol = 1e-9 * s.dom.h2();
  const double lo = B.has_axis2 ? B.lo2 : s.dom.lo2;
  const double hi = B.has_axis2 ? B.hi2 : s.dom.hi2;
  return in_range_with_faces(a.pos, lo, hi, cl.lo2, cl.hi2, tol);
}

struct TvParts {
  std::vector<double> terms;  // per-cell norms * area, then atom norms
};

TvParts tv_terms(const SigmaMeasure& s, const Box& B, Closure cl) {
  require_box_in_domain(s.dom, B);
  const int n1 = s.dom.n1;
  const int n2 = s.dom.has_axis2 ? s.dom.n2 : 1;
  std::vector<double> a0, a1, a2;
  a0.reserve(s.ac.size());
  for (int j = 0; j < n2; ++j) {
    const double b = s.dom.center2(j);
    if (s.dom.has_axis2 && B.has_axis2 && (b <= B.lo2 || b >= B.hi2)) continue;
    for (int i = 0; i < n1; ++i) {
      const double a = s.dom.center1(i);
      if (a <= B.lo1 || a >= B.hi1) continue;
      const auto& v = s.ac[s.dom.index(i, j)];
      a0.push_back(v[0]);
      a1.push_back(v[1]);
      a2.push_back(v[2]);
    }
  }
  TvParts parts;
  parts.terms.resize(a0.size());
  kernels::norm3(a0.data(), a1.data(), a2.data(), parts.terms.data(), a0.size());
  const double area = s.dom.cell_area();
  for (double& t : parts.terms) t *= area;
  for (const SigmaAtom& at : s.atoms) {
    if (!atom_pos_in_box(s, at, B, cl)) continue;
    const double frac = atom_overlap(s, at, B);
    if (frac <= 0.0) continue;
    const double w =
        std::sqrt(at.weight[0] * at.weight[0] + at.weight[1] * at.weight[1] +
                  at.weight[2] * at.weight[2]);
    parts.terms.push_back(w * frac);
  }
  return parts;
}

}  // namespace

double total_variation(const SigmaMeasure& sigma, const Box& B, Closure cl) {
  const TvParts parts = tv_terms(sigma, B, cl);
  return pairwise_sum(parts.terms);
}

double pairing(const SigmaMeasure& sigma,
               const std::function<std::array<double, 3>(double, double)>& phi,
               const Box& B, Closure cl) {
  require_box_in_domain(sigma.dom, B);
  const int n1 = sigma.dom.n1;
  const int n2 = sigma.dom.has_axis2 ? sigma.dom.n2 : 1;
  std::vector<double> terms;
  const double area = sigma.dom.cell_area();
  for (int j = 0; j < n2; ++j) {
    const double b = sigma.dom.center2(j);
    if (sigma.dom.has_axis2 && B.has_axis2 && (b <= B.lo2 || b >= B.hi2)) continue;
    for (int i = 0; i < n1; ++i) {
      const double a = sigma.dom.center1(i);
      if (a <= B.lo1 || a >= B.hi1) continue;
      const auto& v = sigma.ac[sigma.dom.index(i, j)];
      const auto p = phi(a, b);
      terms.push_back((p[0] * v[0] + p[1] * v[1] + p[2] * v[2]) * area);
    }
  }
  for (const SigmaAtom& at : sigma.atoms) {
    if (!atom_pos_in_box(sigma, at, B, cl)) continue;
    const double frac = atom_overlap(sigma, at, B);
    if (frac <= 0.0) continue;
    const double mid = 0.5 * (at.other_lo + at.other_hi);
    const auto p = at.axis == 0 ? phi(at.pos, mid) : phi(mid, at.pos);
    terms.push_back((p[0] * at.weight[0] + p[1] * at.weight[1] +
                     p[2] * at.weight[2]) *
                    frac);
  }
  return pairwise_sum(terms);
}

double pairing_polar(const SigmaMeasure& sigma, const Box& B, Closure cl) {
  require_box_in_domain(sigma.dom, B);
  const int n1 = sigma.dom.n1;
  const int n2 = sigma.dom.has_axis2 ? sigma.dom.n2 : 1;
  std::vector<double> terms;
  const double area = sigma.dom.cell_area();
  auto unit3 = [](const std::array<double, 3>& v) {
    const double n =
        std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return n > 0.0 ? std::array<double, 3>{v[0] / n, v[1] / n, v[2] / n}
                   : std::array<double, 3>{0.0, 0.0, 0.0};
  };
  for (int j = 0; j < n2; ++j) {
    const double b = sigma.dom.center2(j);
    if (sigma.dom.has_axis2 && B.has_axis2 && (b <= B.lo2 || b >= B.hi2)) continue;
    for (int i = 0; i < n1; ++i) {
      const double a = sigma.dom.center1(i);
      if (a <= B.lo1 || a >= B.hi1) continue;
      const auto& v = sigma.ac[sigma.dom.index(i, j)];
      const auto p = unit3(v);
      terms.push_back((p[0] * v[0] + p[1] * v[1] + p[2] * v[2]) * area);
    }
  }
  for (const SigmaAtom& at : sigma.atoms) {
    if (!atom_pos_in_box(sigma, at, B, cl)) continue;
    const double frac = atom_overlap(sigma, at, B);
    if (frac <= 0.0) continue;
    const auto p = unit3(at.weight);
    terms.push_back((p[0] * at.weight[0] + p[1] * at.weight[1] +
                     p[2] * at.weight[2]) *
                    frac);
  }
  return pairwise_sum(terms);
}

}  // namespace symmlab
