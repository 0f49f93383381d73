#pragma once

#include <optional>
#include <vector>

#include "symmlab/arc_set.hpp"
#include "symmlab/geom.hpp"
#include "symmlab/interval_set.hpp"

namespace symmlab {

/// One boundary edge of a ring: the segment from a to b, or the
/// origin-centered circular arc of radius |a| from a to b (ccw flag gives
/// the traversal direction). Origin-centered arcs keep the fixtures exact:
/// a slicing circle never crosses them transversally and band clipping is
/// an angle comparison.
struct Edge {
  Vec2 a, b;
  bool is_arc = false;
  bool ccw = true;

  double arc_radius() const { return norm(a); }
  /// Angular span traversed, in (0, 2pi).
  double arc_span() const;
  double length() const;
  /// Unit tangent in traversal direction at parameter t in [0,1].
  Vec2 tangent(double t) const;
  Vec2 point(double t) const;
};

enum class RingOrientation { Outer, Hole };

struct Ring {
  std::vector<Vec2> vertices;
  RingOrientation orientation = RingOrientation::Outer;
  /// Edge i joins vertices[i] to vertices[(i+1) % n]; indices listed here
  /// are origin-centered arcs, with matching ccw flags.
  std::vector<int> arc_edges;
  std::vector<bool> arc_ccw;

  int edge_count() const { return static_cast<int>(vertices.size()); }
  Edge edge(int i) const;
  double signed_area() const;
};

/// Planar set of finite perimeter represented by oriented simple rings.
/// Outer rings are CCW, holes CW (fixed up during validation); interiors
/// lie to the left of directed edges, so the inner normal of an edge is
/// its left normal.
class PolygonSet {
public:
  PolygonSet() = default;
  explicit PolygonSet(std::vector<Ring> rings);

  const std::vector<Ring>& rings() const { return rings_; }
  double area() const;
  double boundary_length() const;
  /// Even-odd membership; deterministic jittered rays handle degeneracies.
  bool contains(Vec2 p) const;
  /// Radial extent of all vertices/arcs: [min |x| on boundary, max].
  std::pair<double, double> radial_extent() const;
  std::pair<double, double> x_extent() const;
  std::pair<double, double> y_extent() const;

private:
  std::vector<Ring> rings_;
  void validate_and_orient();
};

/// Crossing of the slicing circle/line with the boundary, with provenance
/// for the diagnostics (edge ref and inner normal at the crossing point).
struct SliceCrossing {
  double param = 0.0;   // angle theta (circular) or height y (vertical)
  Vec2 point;
  Vec2 inner_normal;
  bool at_vertex = false;  // crossing indistinguishably close to a vertex
};

struct CircularSlice {
  AngularArcSet arcs{AngularArcSet::empty_set(1.0)};
  std::vector<SliceCrossing> crossings;
  bool degenerate = false;  // tangency / vertex radius: parity unreliable
};

struct VerticalSlice {
  IntervalSet intervals;
  std::vector<SliceCrossing> crossings;
  bool degenerate = false;
};

/// Exact arcs of {|x| = r} inside P, assembled by crossing parity.
CircularSlice slice_circle(const PolygonSet& P, double r);

/// Exact intervals of the vertical line {x = x0} inside P.
VerticalSlice slice_vertical(const PolygonSet& P, double x0);

}  // namespace symmlab
