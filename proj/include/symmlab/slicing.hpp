#pragma once

#include "symmlab/grid.hpp"
#include "symmlab/slice_grid.hpp"

namespace symmlab {

/// Samples the distribution function mu(r,z) (circular) or v(x')
/// (steiner) at cell centers of `grid` via the slice operations, and
/// asserts the compatibility bound.
GridFunction distribution(const SetSource& source, GridDomain grid, Mode mode);

/// Slice of a source at given parameters, as the pipelines see it.
AngularArcSet source_circular_slice(const SetSource& source, double r,
                                    double z = 0.0);
IntervalSet source_vertical_slice(const SetSource& source, double x0,
                                  double x1 = 0.0);

}  // namespace symmlab
