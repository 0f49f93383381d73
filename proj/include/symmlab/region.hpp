#pragma once

#include "symmlab/common.hpp"

namespace symmlab {

/// Box in the slicing parameters (r or x' on axis 1, z on axis 2).
struct Box {
  double lo1 = 0.0, hi1 = 0.0;
  double lo2 = 0.0, hi2 = 0.0;
  bool has_axis2 = false;

  bool contains(double a, double b = 0.0) const {
    if (a < lo1 || a > hi1) return false;
    if (has_axis2 && (b < lo2 || b > hi2)) return false;
    return true;
  }
  double measure() const {
    return has_axis2 ? (hi1 - lo1) * (hi2 - lo2) : (hi1 - lo1);
  }
};

/// Per-face include/exclude flags distinguishing Borel boxes from their
/// interiors: atoms sitting exactly on a face count only when the face is
/// included. Default is half-open [lo, hi) per axis.
struct Closure {
  bool lo1 = true, hi1 = false;
  bool lo2 = true, hi2 = false;

  static Closure open() { return {false, false, false, false}; }
  static Closure closed() { return {true, true, true, true}; }
  static Closure half_open() { return {}; }
};

/// Whether coordinate `x` lies inside [lo,hi] with face semantics, using a
/// tolerance for "exactly on the face".
inline bool in_range_with_faces(double x, double lo, double hi, bool inc_lo,
                                bool inc_hi, double tol) {
  if (std::abs(x - lo) <= tol) return inc_lo;
  if (std::abs(x - hi) <= tol) return inc_hi;
  return x > lo && x < hi;
}

}  // namespace symmlab
