#pragma once

#include <cstddef>
#include <vector>

#include "symmlab/common.hpp"

namespace symmlab {

enum class Mode { Circular, Steiner };

/// Uniform cell-centered grid over a box in the slicing parameters:
/// axis 1 is r (circular) or the first x' coordinate (steiner); axis 2 is
/// z resp. the second x' coordinate, absent for planar problems.
struct GridDomain {
  double lo1 = 0.0, hi1 = 1.0;
  int n1 = 1;
  double lo2 = 0.0, hi2 = 0.0;
  int n2 = 1;
  bool has_axis2 = false;

  double h1() const { return (hi1 - lo1) / n1; }
  double h2() const { return has_axis2 ? (hi2 - lo2) / n2 : 1.0; }
  double center1(int i) const { return lo1 + (i + 0.5) * h1(); }
  double center2(int j) const { return has_axis2 ? lo2 + (j + 0.5) * h2() : 0.0; }
  double interface1(int i) const { return lo1 + (i + 1.0) * h1(); }
  double interface2(int j) const { return lo2 + (j + 1.0) * h2(); }
  /// Cell area (length h1 when there is no second axis).
  double cell_area() const { return has_axis2 ? h1() * h2() : h1(); }
  size_t cell_count() const { return static_cast<size_t>(n1) * (has_axis2 ? n2 : 1); }
  size_t index(int i, int j) const { return static_cast<size_t>(j) * n1 + i; }

  void validate() const {
    SYMMLAB_REQUIRE(n1 >= 1 && hi1 > lo1, "grid axis 1 is degenerate");
    if (has_axis2) SYMMLAB_REQUIRE(n2 >= 1 && hi2 > lo2, "grid axis 2 is degenerate");
  }
  bool operator==(const GridDomain&) const = default;
};

/// Scalar samples at cell centers: mu(r,z), xi(r,z) or v(x').
struct GridFunction {
  GridDomain dom;
  Mode mode = Mode::Circular;
  std::vector<double> values;

  double& at(int i, int j = 0) { return values[dom.index(i, j)]; }
  double at(int i, int j = 0) const { return values[dom.index(i, j)]; }

  static GridFunction zeros(GridDomain dom, Mode mode) {
    dom.validate();
    GridFunction f;
    f.dom = dom;
    f.mode = mode;
    f.values.assign(dom.cell_count(), 0.0);
    return f;
  }
};

/// Asserts the compatibility bound 0 <= mu(r,z) <= 2*pi*r on every cell.
void check_mu_compatibility(const GridFunction& mu);

/// Pointwise xi = mu / r at cell centers; range stays inside [0, 2pi].
GridFunction xi_from_mu(const GridFunction& mu);

}  // namespace symmlab
