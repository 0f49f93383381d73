#pragma once

#include <array>
#include <cmath>

#include "symmlab/geom.hpp"

namespace symmlab {

/// Circularised inner unit normal: (x_hat . nu_x, |nu_x_parallel|, nu_z).
/// The tangential slot is a magnitude, so the triple is rotation invariant.
/// At k = 2 the vertical slot is identically zero.
struct CircNormal {
  double radial = 0.0;
  double tangential = 0.0;
  double vertical = 0.0;

  double norm() const {
    return std::sqrt(radial * radial + tangential * tangential +
                     vertical * vertical);
  }
  bool operator==(const CircNormal&) const = default;
};

inline double distance(const CircNormal& a, const CircNormal& b) {
  const double dr = a.radial - b.radial;
  const double dt = a.tangential - b.tangential;
  const double dv = a.vertical - b.vertical;
  return std::sqrt(dr * dr + dt * dt + dv * dv);
}

/// Decomposes a unit normal at x != 0 into circular components.
/// nu_x is the planar part, nu_z the vertical part (0 for k = 2).
inline CircNormal normal_to_circ(Vec2 nu_x, double nu_z, Vec2 x) {
  SYMMLAB_REQUIRE(norm2(x) > 0.0, "normal_to_circ: x must be nonzero");
  const Vec2 xh = unit(x);
  CircNormal c;
  c.radial = dot(xh, nu_x);
  c.tangential = std::abs(cross(xh, nu_x));
  c.vertical = nu_z;
  SYMMLAB_REQUIRE(std::abs(c.norm() - 1.0) < 1e-9,
                  "normal_to_circ: input normal is not unit length");
  return c;
}

/// Steiner counterpart: replaces the last component by its absolute value.
template <size_t K>
std::array<double, K> steiner_nu_s(std::array<double, K> nu) {
  nu[K - 1] = std::abs(nu[K - 1]);
  return nu;
}

}  // namespace symmlab
