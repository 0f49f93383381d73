#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symmlab/grid.hpp"
#include "symmlab/region.hpp"
#include "symmlab/scalar_field.hpp"

namespace symmlab {

/// Jump detected between two adjacent cells. `delta` is the raw difference
/// f(high cell) - f(low cell); it is the full singular mass of the
/// interface (per unit length of the transverse axis at k = 3).
struct GridJump {
  int axis = 0;       // 0: interface at fixed axis-1 coordinate
  int i = 0, j = 0;   // low cell of the pair
  double pos = 0.0;   // interface coordinate along `axis`
  double other = 0.0; // cell-center coordinate along the other axis
  double delta = 0.0;
};

struct BvOptions {
  /// Jump iff |df| > multiplier * (local median of |df| over a 5-interface
  /// window); separates O(h) smooth increments from O(1) jumps.
  double median_multiplier = 10.0;
  /// Overrides the adaptive rule with a fixed threshold when set.
  std::optional<double> absolute_threshold;
};

/// ac/jump split of the derivative of a grid function.
/// Interface slopes make the reconstruction identity exact: summing
/// slope*h over non-jump interfaces plus jump deltas along a grid line
/// telescopes to the endpoint difference. Cell gradients average the
/// adjacent non-jump interface slopes (central differences inside smooth
/// regions, one-sided next to jumps and domain ends).
struct BvDecomposition {
  GridDomain dom;
  std::vector<double> cell_grad1, cell_grad2;    // per cell
  std::vector<double> iface_grad1, iface_grad2;  // per interface, 0 at jumps
  std::vector<GridJump> jumps;

  double iface1(int i, int j) const {
    return iface_grad1[static_cast<size_t>(j) * (dom.n1 - 1) + i];
  }
  double iface2(int i, int j) const {
    return iface_grad2[static_cast<size_t>(j) * dom.n1 + i];
  }
  /// axis-1 interface coordinates that carry a jump in any row
  /// (the vertical walls of the interpolated symmetral).
  std::vector<JumpWall> wall_positions() const;
};

BvDecomposition bv_decompose(const GridFunction& f, BvOptions opt = {});

/// Endpoint-difference reconstruction along one grid line; the returned
/// gap is a pure rounding residual (<< 1e-9).
double reconstruction_gap(const GridFunction& f, const BvDecomposition& dec,
                          int axis, int line);

/// Discretized vector Radon measure sigma_mu / sigma_v: an absolutely
/// continuous per-cell density plus grid-aligned atoms. Slot layout:
/// circular (r d_r xi, 2 L^{k-1} on {mu>0}, d_z mu); steiner
/// (grad v, 2 L^{k-1} on {v>0}) with the Lebesgue slot last.
struct SigmaAtom {
  int axis = 0;
  double pos = 0.0;                  // interface coordinate
  double other_lo = 0.0, other_hi = 0.0;  // transverse extent (k = 3)
  std::array<double, 3> weight{0.0, 0.0, 0.0};
};

struct SigmaMeasure {
  Mode mode = Mode::Circular;
  GridDomain dom;
  int lebesgue_slot = 1;
  std::vector<std::array<double, 3>> ac;  // per cell, zero outside support
  std::vector<std::uint8_t> support;      // {mu > eps} (full slices excluded)
  std::vector<std::uint8_t> full_slice;   // mu >= 2*pi*r*(1 - 1e-9)
  std::vector<SigmaAtom> atoms;
  std::vector<std::string> warnings;
  BvDecomposition dec;        // kept for the symmetral interpolant
  GridFunction source;        // mu (circular) or v (steiner)
};

struct SigmaOptions {
  BvOptions bv;
  /// Keep full slices in the support indicator, reproducing the formula
  /// literally even where it overshoots the symmetral perimeter.
  bool literal_sigma = false;
};

SigmaMeasure sigma_measure(const GridFunction& f, Mode mode,
                           SigmaOptions opt = {});

/// |sigma|(B) with Borel-box semantics: atoms on faces count per closure.
double total_variation(const SigmaMeasure& sigma, const Box& B,
                       Closure closure = Closure::half_open());

/// Discrete pairing integral_B phi . d sigma for a bounded vector field
/// phi(a, b) evaluated at cell centers and atom midpoints.
double pairing(const SigmaMeasure& sigma,
               const std::function<std::array<double, 3>(double, double)>& phi,
               const Box& B, Closure closure = Closure::half_open());

/// pairing with phi = d sigma / d|sigma| (equals total_variation).
double pairing_polar(const SigmaMeasure& sigma, const Box& B,
                     Closure closure = Closure::half_open());

}  // namespace symmlab
