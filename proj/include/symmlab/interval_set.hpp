#pragma once

#include <vector>

#include "symmlab/common.hpp"

namespace symmlab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Finite disjoint union of bounded open intervals on the line, normalized
/// up to H^1-null sets (touching intervals merge, slivers are dropped).
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> raw);

  static IntervalSet empty_set() { return IntervalSet(); }
  /// (-w/2, w/2) centered at c.
  static IntervalSet centered(double c, double w);

  bool empty() const { return intervals_.empty(); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  double measure() const;
  int component_count() const { return static_cast<int>(intervals_.size()); }
  bool contains(double y) const;

  bool operator==(const IntervalSet&) const = default;

private:
  std::vector<Interval> intervals_;
};

IntervalSet interval_boolean(const IntervalSet& a, const IntervalSet& b,
                             BoolOp op);

double symmetric_difference_measure(const IntervalSet& a, const IntervalSet& b);

}  // namespace symmlab
