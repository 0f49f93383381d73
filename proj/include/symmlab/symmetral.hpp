#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symmlab/arc_family.hpp"
#include "symmlab/bv.hpp"
#include "symmlab/slice_grid.hpp"

namespace symmlab {

/// Circular symmetral F_mu: theta_c == 0, xi = mu/r interpolated piecewise
/// linearly between cell centers; jump interfaces become vertical walls of
/// the set rather than interpolation ramps.
ArcFamilySet build_F_mu(const GridFunction& mu, BvOptions bv = {});

/// Steiner symmetral F[v]: per-cell centered interval (-v/2, v/2).
SliceGrid build_F_v(const GridFunction& v);

struct MonotoneReport {
  bool ok = true;
  std::string violation;           // empty when ok
  double at1 = 0.0, at2 = 0.0;     // first offending sample / cell center
};

/// True iff every slice is a single arc centered on the positive x-axis
/// (circular) / a single origin-centered interval (steiner).
MonotoneReport monotone_check(const ArcFamilySet& F);
MonotoneReport monotone_check(const SliceGrid& F);

struct DensityEstimate {
  double gamma = 0.0;
  double rho = 0.0;
  double estimate = 0.0;
  double stderr_est = 0.0;
};

struct DensityProfile {
  std::vector<DensityEstimate> entries;   // all (gamma, rho) pairs
  std::vector<double> final_estimate;     // per gamma, from the smallest rho
  std::uint64_t seed = 0;
};

/// Monte-Carlo estimate of the k-density H^k(F cap B_rho(p)) / (omega_k
/// rho^k) at p = (R_gamma x_r, z), stratified, with one seeded substream
/// per (gamma, rho) task so results are independent of scheduling.
DensityProfile density_profile(const ArcFamilySet& F, double r, double z,
                               const std::vector<double>& gammas,
                               const std::vector<double>& rho_schedule,
                               int n_samples, std::uint64_t seed);

}  // namespace symmlab
