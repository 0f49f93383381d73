#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symmlab/bv.hpp"
#include "symmlab/circ_normal.hpp"
#include "symmlab/perimeter.hpp"
#include "symmlab/slice_grid.hpp"
#include "symmlab/slicing.hpp"
#include "symmlab/symmetral.hpp"

namespace symmlab {

/// Profile normal of the symmetral: the common circularised normal of the
/// two slice endpoints, computed from the xi gradient as
/// (r xi_r / 2, 1, grad_z mu / 2) normalized. nullopt (the zero vector of
/// the Borel field) when the slice is empty or full.
std::optional<CircNormal> bar_nu_F(const ArcFamilySet& F_mu, double r,
                                   double z = 0.0);
std::optional<CircNormal> bar_nu_F(const GridFunction& mu, double r,
                                   double z = 0.0);

/// Slice boundary point with its full inner normal and the circularised
/// components.
struct BoundaryPoint {
  Vec2 x;
  double z = 0.0;
  Vec2 nu_x;
  double nu_z = 0.0;
  CircNormal circ;
  bool at_vertex = false;
};

/// Boundary points of the slice at (r, z): polygon slice-endpoint
/// crossings with inward edge normals, or the two analytic lateral-graph
/// normals of an arc family. Points at polygon vertices are flagged.
std::vector<BoundaryPoint> boundary_normals(const SetSource& src, double r,
                                            double z = 0.0);

struct ConditionA {
  bool pass = true;
  double violating_measure = 0.0;
  double fraction = 0.0;
  int slices_checked = 0;
};

struct ConditionB {
  bool pass = true;
  double max_deviation = 0.0;
  int slices_checked = 0;
  int slices_compared = 0;
  int excised = 0;
  int excision_budget = 0;
  std::vector<std::array<double, 3>> violating;  // (r, z, deviation), worst few
};

struct DiagnosticsReport {
  Mode mode = Mode::Circular;
  Box region;
  Closure closure;
  double p_set = 0.0;
  double p_symmetral = 0.0;      // total-variation route
  double gap = 0.0;
  double p_formula = 0.0;        // bitwise-identical companion of p_symmetral
  double p_quadrature = 0.0;     // graph quadrature of the built symmetral
  double quad_err = 0.0;
  ConditionA condition_a;
  ConditionB condition_b;
  bool equality = false;
  double tolerance = 0.0;        // equality/gap tolerance
  double b_tolerance = 0.0;
  int grid_n1 = 0, grid_n2 = 0, n_q = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
};

struct VerifyOptions {
  int grid_n = 1000;        // distribution cells across the region
  int diag_samples = 192;   // condition-check slices per axis
  int n_q = 1024;           // quadrature base resolution
  SigmaOptions sigma;
  std::optional<double> tol;       // gap tolerance override
  std::optional<double> b_tol;     // condition-b tolerance override
  std::optional<int> excision_budget;
  std::uint64_t seed = 0;
};

ConditionA check_condition_a(const SetSource& src, const Box& B,
                             int samples_per_axis = 192,
                             double tolerance_fraction = 1e-9);

ConditionB check_condition_b(const SetSource& src, const ArcFamilySet& F_mu,
                             const Box& B, double tol,
                             int samples_per_axis = 192,
                             int excision_budget = 0);

/// Full inequality + equality-condition report for a circular source over
/// region B. Asserts the report invariants (inequality up to tolerance,
/// equality verdict iff conditions a and b).
DiagnosticsReport verify_inequality(const SetSource& src, const Box& B,
                                    Closure cl = Closure::closed(),
                                    VerifyOptions opt = {});

struct PropositionReport {
  bool pass = true;
  double max_dev_constancy = 0.0;   // endpoint CircNormal equality
  double max_dev_rotation = 0.0;    // rotation covariance of the normals
  double max_dev_reflection = 0.0;  // reflection symmetry across {x2 = 0}
  int slices_checked = 0;
};

/// Structural checks of the symmetral normals on sampled slices of
/// build_F_mu(mu): endpoint constancy, rotation covariance, reflection.
PropositionReport verify_symmetral_propositions(const GridFunction& mu,
                                                int n_checks,
                                                double tol = 1e-9);

}  // namespace symmlab
