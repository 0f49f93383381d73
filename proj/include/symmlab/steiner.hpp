#pragma once

#include "symmlab/diagnostics.hpp"

namespace symmlab {

/// sigma_v = (grad v, 2 L^{k-1} restricted to {v > 0}): the steiner-mode
/// sigma measure; |sigma_v|(B) equals P(F[v]; B x R).
SigmaMeasure steiner_sigma(const GridFunction& v, SigmaOptions opt = {});

/// Steiner profile normal (nu-bar of F[v]) at x', from the interpolated
/// distribution: (v'/2, 1)/sqrt(1 + v'^2/4), stored as (first, last)
/// components; nullopt where v vanishes.
std::optional<CircNormal> bar_nu_F_v(const ScalarField& v_interp, double x0,
                                     double v_at);

/// Graph-quadrature perimeter of F[v] built from the interpolant of v:
/// two graphs y = +-v/2 plus wall terms |delta v|.
QuadratureResult steiner_graph_perimeter(const GridFunction& v, const Box& B,
                                         Closure cl = Closure::half_open(),
                                         QuadratureOptions q = {},
                                         BvOptions bv = {});

/// Steiner counterpart of verify_inequality for exact planar sets: the
/// same report structure with nu_s in place of nu_c. Components of nu_s
/// are stored in the (radial, tangential) slots of CircNormal.
DiagnosticsReport steiner_verify(const PolygonSet& P, const Box& B,
                                 Closure cl = Closure::closed(),
                                 VerifyOptions opt = {});

}  // namespace symmlab
