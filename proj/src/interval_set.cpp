#include "symmlab/interval_set.hpp"

#include <algorithm>
#include <cmath>

namespace symmlab {

IntervalSet::IntervalSet(std::vector<Interval> raw) {
  std::erase_if(raw, [](const Interval& v) { return v.length() < kAngleEps; });
  for (const Interval& v : raw)
    SYMMLAB_REQUIRE(std::isfinite(v.lo) && std::isfinite(v.hi),
                    "interval endpoints must be finite");
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const Interval& v : raw) {
    if (!intervals_.empty() && v.lo <= intervals_.back().hi) {
      intervals_.back().hi = std::max(intervals_.back().hi, v.hi);
    } else {
      intervals_.push_back(v);
    }
  }
}

IntervalSet IntervalSet::centered(double c, double w) {
  if (w < kAngleEps) return IntervalSet();
  return IntervalSet({{c - w / 2.0, c + w / 2.0}});
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const Interval& v : intervals_) m += v.length();
  return m;
}

bool IntervalSet::contains(double y) const {
  for (const Interval& v : intervals_)
    if (v.lo < y && y < v.hi) return true;
  return false;
}

IntervalSet interval_boolean(const IntervalSet& a, const IntervalSet& b,
                             BoolOp op) {
  switch (op) {
    case BoolOp::Intersection: {
      std::vector<Interval> out;
      const auto& A = a.intervals();
      const auto& B = b.intervals();
      size_t i = 0, j = 0;
      while (i < A.size() && j < B.size()) {
        const double lo = std::max(A[i].lo, B[j].lo);
        const double hi = std::min(A[i].hi, B[j].hi);
        if (lo < hi) out.push_back({lo, hi});
        if (A[i].hi < B[j].hi)
          ++i;
        else
          ++j;
      }
      return IntervalSet(std::move(out));
    }
    case BoolOp::Union: {
      std::vector<Interval> out = a.intervals();
      out.insert(out.end(), b.intervals().begin(), b.intervals().end());
      return IntervalSet(std::move(out));
    }
    case BoolOp::Difference: {
      std::vector<Interval> out;
      const auto& B = b.intervals();
      for (Interval v : a.intervals()) {
        double lo = v.lo;
        for (const Interval& cut : B) {
          if (cut.hi <= lo) continue;
          if (cut.lo >= v.hi) break;
          if (cut.lo > lo) out.push_back({lo, cut.lo});
          lo = std::max(lo, cut.hi);
        }
        if (lo < v.hi) out.push_back({lo, v.hi});
      }
      return IntervalSet(std::move(out));
    }
  }
  throw input_error("interval_boolean: unknown op");
}

double symmetric_difference_measure(const IntervalSet& a, const IntervalSet& b) {
  return interval_boolean(a, b, BoolOp::Difference).measure() +
         interval_boolean(b, a, BoolOp::Difference).measure();
}

}  // namespace symmlab
