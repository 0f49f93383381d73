#include "symmlab/arc_set.hpp"

#include <algorithm>
#include <cmath>

namespace symmlab {

namespace {

// Sort, merge overlapping/touching arcs, drop slivers. Input arcs must
// already live in (-pi, pi].
std::vector<Arc> merge_sorted(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
  std::vector<Arc> out;
  for (const Arc& a : arcs) {
    if (!out.empty() && a.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, a.hi);
    } else {
      out.push_back(a);
    }
  }
  std::erase_if(out, [](const Arc& a) { return a.width() < kAngleEps; });
  return out;
}

}  // namespace

AngularArcSet::AngularArcSet(double radius, std::vector<Arc> raw_arcs)
    : radius_(radius) {
  SYMMLAB_REQUIRE(radius > 0.0, "arc set radius must be positive");
  std::vector<Arc> split;
  for (const Arc& a : raw_arcs) {
    double w = a.hi - a.lo;
    SYMMLAB_REQUIRE(std::isfinite(a.lo) && std::isfinite(w) && w >= 0.0,
                    "arc endpoints must be finite with hi >= lo");
    if (w < kAngleEps) continue;
    if (w >= kTwoPi - kAngleEps) {
      full_ = true;
      arcs_.clear();
      return;
    }
    double lo = wrap_angle(a.lo);
    // wrap_angle lands lo in (-pi, pi]; an arc starting exactly at pi
    // begins at the cut, i.e. at -pi.
    if (lo == kPi) lo = -kPi;
    double hi = lo + w;
    if (hi > kPi) {
      split.push_back({lo, kPi});
      split.push_back({-kPi, hi - kTwoPi});
    } else {
      split.push_back({lo, hi});
    }
  }
  arcs_ = merge_sorted(std::move(split));
  if (total_width() >= kTwoPi - kAngleEps) {
    full_ = true;
    arcs_.clear();
  }
}

AngularArcSet AngularArcSet::empty_set(double radius) {
  AngularArcSet s;
  s.radius_ = radius;
  SYMMLAB_REQUIRE(radius > 0.0, "arc set radius must be positive");
  return s;
}

AngularArcSet AngularArcSet::full_circle(double radius) {
  AngularArcSet s = empty_set(radius);
  s.full_ = true;
  return s;
}

AngularArcSet AngularArcSet::centered(double radius, double center,
                                      double width) {
  return AngularArcSet(radius, {{center - width / 2.0, center + width / 2.0}});
}

double AngularArcSet::total_width() const {
  if (full_) return kTwoPi;
  double w = 0.0;
  for (const Arc& a : arcs_) w += a.width();
  return w;
}

bool AngularArcSet::contains(double theta) const {
  if (full_) return true;
  double t = wrap_angle(theta);
  for (const Arc& a : arcs_)
    if (a.lo < t && t <= a.hi) return true;
  return false;
}

int AngularArcSet::component_count() const {
  if (full_) return 1;
  if (arcs_.empty()) return 0;
  int n = static_cast<int>(arcs_.size());
  // Arcs meeting across the cut at +-pi form one component on the circle.
  if (n > 1 && arcs_.front().lo <= -kPi + kAngleEps &&
      arcs_.back().hi >= kPi - kAngleEps)
    --n;
  return n;
}

AngularArcSet AngularArcSet::complement() const {
  if (full_) return empty_set(radius_);
  if (arcs_.empty()) return full_circle(radius_);
  std::vector<Arc> gaps;
  for (size_t i = 0; i + 1 < arcs_.size(); ++i)
    gaps.push_back({arcs_[i].hi, arcs_[i + 1].lo});
  // Wrap gap from the last hi around the cut to the first lo.
  gaps.push_back({arcs_.back().hi, arcs_.front().lo + kTwoPi});
  return AngularArcSet(radius_, std::move(gaps));
}

AngularArcSet arcset_boolean(const AngularArcSet& a, const AngularArcSet& b,
                             BoolOp op) {
  SYMMLAB_REQUIRE(a.radius() == b.radius(),
                  "arcset_boolean: radius mismatch");
  switch (op) {
    case BoolOp::Intersection: {
      if (a.full()) return b;
      if (b.full()) return a;
      std::vector<Arc> out;
      const auto& A = a.arcs();
      const auto& B = b.arcs();
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
      return AngularArcSet(a.radius(), std::move(out));
    }
    case BoolOp::Union:
      return arcset_boolean(a.complement(), b.complement(), BoolOp::Intersection)
          .complement();
    case BoolOp::Difference:
      return arcset_boolean(a, b.complement(), BoolOp::Intersection);
  }
  throw input_error("arcset_boolean: unknown op");
}

double symmetric_difference_measure(const AngularArcSet& a,
                                    const AngularArcSet& b) {
  const AngularArcSet ab = arcset_boolean(a, b, BoolOp::Difference);
  const AngularArcSet ba = arcset_boolean(b, a, BoolOp::Difference);
  return ab.measure() + ba.measure();
}

}  // namespace symmlab
