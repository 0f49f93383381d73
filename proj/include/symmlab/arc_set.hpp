#pragma once

#include <vector>

#include "symmlab/common.hpp"

namespace symmlab {

/// Half-open angular interval (lo, hi] with -pi <= lo < hi <= pi.
struct Arc {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool operator==(const Arc&) const = default;
};

/// A slice of a set on the circle of radius `radius`: a finite disjoint
/// union of half-open arcs, normalized (sorted, merged, slivers dropped,
/// wraparound split at pi). The full circle is stored as an explicit flag
/// so the degenerate mu = 2*pi*r case stays detectable.
class AngularArcSet {
public:
  AngularArcSet() = default;

  /// Arcs are given as (lo, lo + width]; any real lo, width in [0, 2pi].
  /// Overlapping and touching inputs are merged.
  AngularArcSet(double radius, std::vector<Arc> raw_arcs);

  static AngularArcSet empty_set(double radius);
  static AngularArcSet full_circle(double radius);
  /// Single arc centered at `center` with angular width `width`.
  static AngularArcSet centered(double radius, double center, double width);

  double radius() const { return radius_; }
  bool empty() const { return !full_ && arcs_.empty(); }
  bool full() const { return full_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  double total_width() const;
  /// H^1 measure: radius * total angular width.
  double measure() const { return radius_ * total_width(); }

  bool contains(double theta) const;

  /// Number of connected components on the circle (arcs touching across
  /// the +-pi cut count as one). full -> 1, empty -> 0.
  int component_count() const;

  AngularArcSet complement() const;

  bool operator==(const AngularArcSet&) const = default;

private:
  double radius_ = 1.0;
  std::vector<Arc> arcs_;
  bool full_ = false;
};

enum class BoolOp { Union, Intersection, Difference };

AngularArcSet arcset_boolean(const AngularArcSet& a, const AngularArcSet& b,
                             BoolOp op);

inline double arcset_measure(const AngularArcSet& s) { return s.measure(); }

/// Measure of the symmetric difference; the natural notion of distance
/// between slices up to H^1-null sets.
double symmetric_difference_measure(const AngularArcSet& a,
                                    const AngularArcSet& b);

}  // namespace symmlab
