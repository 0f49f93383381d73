#pragma once

#include <array>
#include <functional>
#include <string>

#include "symmlab/arc_family.hpp"
#include "symmlab/bv.hpp"
#include "symmlab/polygon.hpp"
#include "symmlab/region.hpp"

namespace symmlab {

/// Exact length of the polygon boundary clipped to the region:
/// circular mode clips to the annulus {lo1 < |x| < hi1}; steiner mode to
/// the vertical band {lo1 < x < hi1}. Closure flags decide whether arc
/// edges lying exactly on a band face are counted.
double polygon_perimeter(const PolygonSet& P, Mode mode, const Box& B,
                         Closure cl = Closure::half_open());

struct QuadratureOptions {
  int n_q = 2048;      // midpoint points per axis at the base resolution
  bool refine = true;  // also run 2*n_q and report the difference
};

struct QuadratureResult {
  double value = 0.0;         // finest evaluation
  double coarse = 0.0;        // base n_q evaluation (== value when !refine)
  double err_estimate = 0.0;  // |value - coarse|
};

/// Perimeter of an arc-family set over Phi(B x S^1) by midpoint quadrature
/// of the two lateral boundary graphs theta_c +- xi/2, plus wall terms
/// along declared jumps and domain edges (counted per closure flags).
/// Refuses when sampled field differences exceed the declared Lipschitz
/// bound.
QuadratureResult arcfamily_perimeter(const ArcFamilySet& A, const Box& B,
                                     Closure cl = Closure::half_open(),
                                     QuadratureOptions q = {});

/// Closed-form perimeter of F_mu from the BV data of mu: the ac integral
/// 2 sqrt(1 + |r d_r xi|^2/4 + |grad_z mu|^2/4) over B cap {mu>0} plus the
/// r-scaled singular jump mass. Assembled from the same discrete data as
/// sigma_mu, so it coincides bitwise with total_variation(sigma_measure).
double perimeter_F_mu_formula(const GridFunction& mu, const Box& B,
                              Closure cl = Closure::half_open(),
                              SigmaOptions opt = {});

/// Weight g(r) with an explicit antiderivative, so both sides of the
/// coarea identity integrate exactly.
struct CoareaFunction {
  std::string name;
  std::function<double(double)> g;
  std::function<double(double)> G;  // dG/dr = g
};

CoareaFunction coarea_g_one();
CoareaFunction coarea_g_r();
CoareaFunction coarea_g_sin();
CoareaFunction coarea_g_zero();

struct CoareaResult {
  double lhs = 0.0;  // boundary integral of g(|x|) |nu_par|
  double rhs = 0.0;  // integral of g(r) H^0(slice boundary)
  double gap = 0.0;
};

/// Both sides of the slicing coarea identity over the open band B.
CoareaResult coarea_check(const PolygonSet& P, const CoareaFunction& g,
                          const Box& B);

/// integral over the boundary in the band of phi(|x|) . nu_c dH^1, for
/// bounded phi; dense Gauss quadrature per clipped edge piece. The
/// independent right-hand side of the sigma pairing inequality.
double boundary_integral_circ(
    const PolygonSet& P,
    const std::function<std::array<double, 3>(double)>& phi, const Box& B,
    Closure cl = Closure::half_open());

}  // namespace symmlab
