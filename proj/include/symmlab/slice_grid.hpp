#pragma once

#include <variant>
#include <vector>

#include "symmlab/arc_family.hpp"
#include "symmlab/arc_set.hpp"
#include "symmlab/grid.hpp"
#include "symmlab/interval_set.hpp"
#include "symmlab/polygon.hpp"

namespace symmlab {

/// Discrete carrier for mu-distributed sets: one slice per grid cell,
/// sampled at cell centers. Circular cells live on circles of the cell
/// center radius; steiner cells are interval sets on the vertical line.
struct SliceGrid {
  GridDomain dom;
  Mode mode = Mode::Circular;
  std::vector<AngularArcSet> circ_cells;
  std::vector<IntervalSet> line_cells;

  const AngularArcSet& circ_at(int i, int j = 0) const {
    return circ_cells[dom.index(i, j)];
  }
  const IntervalSet& line_at(int i, int j = 0) const {
    return line_cells[dom.index(i, j)];
  }
  void validate() const;
};

/// A set any pipeline operation can slice: exact polygon, analytic arc
/// family, or a pre-sliced grid.
using SetSource = std::variant<PolygonSet, ArcFamilySet, SliceGrid>;

}  // namespace symmlab
