#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symmlab/grid.hpp"

namespace symmlab {

/// Interface positions (axis + coordinate) along which an interpolant is
/// discontinuous; interpolation never crosses them.
struct JumpWall {
  int axis = 0;  // 0: wall at fixed axis-1 coordinate, 1: fixed axis-2
  double pos = 0.0;
};

/// Serializable description of a field: catalog name + parameters, or the
/// grid data of an interpolant.
struct FieldDescription {
  std::string kind;            // "const" | "linear" | "sin_r" | "grid"
  std::vector<double> params;  // catalog parameters, empty for "grid"
  GridFunction grid;           // set for "grid"
  std::vector<JumpWall> walls;
};

/// Scalar field on a box in (r, z) with analytic first derivatives.
/// Implementations: small catalog of analytic builtins, and the piecewise
/// linear interpolant of a GridFunction with explicit jump walls.
class ScalarField {
public:
  virtual ~ScalarField() = default;
  virtual double eval(double a, double b) const = 0;
  virtual double d1(double a, double b) const = 0;  // d/dr
  virtual double d2(double a, double b) const = 0;  // d/dz
  virtual std::unique_ptr<ScalarField> clone() const = 0;
  virtual FieldDescription describe() const = 0;
  /// One-sided limit for fields with jump walls: side -1 takes the
  /// left/below panel when the point sits exactly on a wall, +1 the other.
  /// Continuous fields ignore the sides.
  virtual double eval_side(double a, double b, int /*side1*/,
                           int /*side2*/) const {
    return eval(a, b);
  }
};

/// c
std::unique_ptr<ScalarField> make_const_field(double c);
/// a0 + a1 * r + a2 * z
std::unique_ptr<ScalarField> make_linear_field(double a0, double a1, double a2);
/// a + b * sin(w * r)
std::unique_ptr<ScalarField> make_sin_r_field(double a, double b, double w);

/// Piecewise-(bi)linear interpolant of cell-center samples. Jump walls
/// split the domain into panels; values extrapolate linearly from the
/// nearest in-panel segment up to panel edges.
std::unique_ptr<ScalarField> make_grid_interpolant(GridFunction f,
                                                   std::vector<JumpWall> walls);

}  // namespace symmlab
