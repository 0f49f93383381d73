#pragma once

#include <map>
#include <string>

#include "symmlab/slice_grid.hpp"

namespace symmlab {

using GeneratorParams = std::map<std::string, double>;

/// Built-in fixture sets. Polygon fixtures use exact origin-centered arc
/// edges; curved-side fixtures are arc families.
///   half_disk{R}            {x1 > 0, |x| < R}
///   disk{R}                 {|x| < R}
///   wedge{alpha,r0,r1}      {r0 < r < r1, |theta| < alpha/2}
///   rotated_wedge{alpha,beta,r0,r1}
///   split_wedge{alpha,r0,r1}          two wedges of width alpha/2
///   drifted_wedge{alpha,c,r0,r1}      theta_c = c (r - r0)
///   twisted_band{alpha,s,r0,r1,z0,z1} theta_c = s z   (k = 3)
///   sheared_square{}        {0 < x < 1, x < y < x + 1}
///   stacked_squares{}       [0,1]^2 and [0,1] x [1.5, 2.5]
///   random_polygon{n,seed}  star-shaped simple polygon away from the origin
SetSource make_fixture(const std::string& name, const GeneratorParams& params);

bool is_known_fixture(const std::string& name);

}  // namespace symmlab
