#include "symmlab/slicing.hpp"

#include <cmath>

#include "symmlab/parallel.hpp"

namespace symmlab {

void check_mu_compatibility(const GridFunction& mu) {
  SYMMLAB_REQUIRE(mu.mode == Mode::Circular, "compatibility bound is circular");
  for (int j = 0; j < (mu.dom.has_axis2 ? mu.dom.n2 : 1); ++j) {
    for (int i = 0; i < mu.dom.n1; ++i) {
      const double r = mu.dom.center1(i);
      const double m = mu.at(i, j);
      SYMMLAB_REQUIRE(std::isfinite(m), "mu has non-finite values");
      SYMMLAB_REQUIRE(m >= -1e-12 && m <= kTwoPi * r * (1.0 + 1e-9) + 1e-12,
                      "mu violates 0 <= mu <= 2*pi*r: broken source");
    }
  }
}

GridFunction xi_from_mu(const GridFunction& mu) {
  check_mu_compatibility(mu);
  GridFunction xi = mu;
  for (int j = 0; j < (mu.dom.has_axis2 ? mu.dom.n2 : 1); ++j)
    for (int i = 0; i < mu.dom.n1; ++i)
      xi.at(i, j) = mu.at(i, j) / mu.dom.center1(i);
  return xi;
}

void SliceGrid::validate() const {
  dom.validate();
  if (mode == Mode::Circular) {
    SYMMLAB_REQUIRE(circ_cells.size() == dom.cell_count(),
                    "slice grid cell count mismatch");
    SYMMLAB_REQUIRE(dom.lo1 >= 0.0, "circular slice grid needs r > 0");
    for (int j = 0; j < (dom.has_axis2 ? dom.n2 : 1); ++j) {
      for (int i = 0; i < dom.n1; ++i) {
        const auto& s = circ_at(i, j);
        SYMMLAB_REQUIRE(std::abs(s.radius() - dom.center1(i)) <
                            1e-9 * (1.0 + dom.center1(i)),
                        "slice grid cell radius != cell center radius");
      }
    }
  } else {
    SYMMLAB_REQUIRE(line_cells.size() == dom.cell_count(),
                    "slice grid cell count mismatch");
  }
}

namespace {

// Cell centers can land exactly on vertex/tangency radii; those are
// L^1-null, so step off by a hair and resample.
AngularArcSet polygon_slice_robust(const PolygonSet& P, double r) {
  double rr = r;
  for (int attempt = 0; attempt < 8; ++attempt) {
    CircularSlice s = slice_circle(P, rr);
    bool vertexy = s.degenerate;
    for (const auto& c : s.crossings) vertexy = vertexy || c.at_vertex;
    if (!vertexy) return s.arcs;
    rr = r + (attempt + 1) * 3e-10 * (1.0 + r);
  }
  return slice_circle(P, rr).arcs;
}

IntervalSet polygon_vslice_robust(const PolygonSet& P, double x0) {
  double xx = x0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    VerticalSlice s = slice_vertical(P, xx);
    bool vertexy = s.degenerate;
    for (const auto& c : s.crossings) vertexy = vertexy || c.at_vertex;
    if (!vertexy) return s.intervals;
    xx = x0 + (attempt + 1) * 3e-10 * (1.0 + std::abs(x0));
  }
  return slice_vertical(P, xx).intervals;
}

}  // namespace

AngularArcSet source_circular_slice(const SetSource& source, double r,
                                    double z) {
  if (const auto* P = std::get_if<PolygonSet>(&source))
    return polygon_slice_robust(*P, r);
  if (const auto* A = std::get_if<ArcFamilySet>(&source)) return A->slice(r, z);
  const auto& G = std::get<SliceGrid>(source);
  SYMMLAB_REQUIRE(G.mode == Mode::Circular, "slice grid is not circular");
  // Nearest cell; callers sample at cell centers.
  const int i = std::clamp(
      static_cast<int>(std::floor((r - G.dom.lo1) / G.dom.h1())), 0, G.dom.n1 - 1);
  const int j = G.dom.has_axis2
                    ? std::clamp(static_cast<int>(std::floor((z - G.dom.lo2) / G.dom.h2())),
                                 0, G.dom.n2 - 1)
                    : 0;
  return G.circ_at(i, j);
}

IntervalSet source_vertical_slice(const SetSource& source, double x0, double x1) {
  if (const auto* P = std::get_if<PolygonSet>(&source))
    return polygon_vslice_robust(*P, x0);
  if (std::get_if<ArcFamilySet>(&source))
    throw input_error("steiner slicing of an arc family is not supported");
  const auto& G = std::get<SliceGrid>(source);
  SYMMLAB_REQUIRE(G.mode == Mode::Steiner, "slice grid is not steiner");
  const int i = std::clamp(
      static_cast<int>(std::floor((x0 - G.dom.lo1) / G.dom.h1())), 0, G.dom.n1 - 1);
  const int j = G.dom.has_axis2
                    ? std::clamp(static_cast<int>(std::floor((x1 - G.dom.lo2) / G.dom.h2())),
                                 0, G.dom.n2 - 1)
                    : 0;
  return G.line_at(i, j);
}

GridFunction distribution(const SetSource& source, GridDomain grid, Mode mode) {
  grid.validate();
  if (mode == Mode::Circular)
    SYMMLAB_REQUIRE(grid.lo1 >= 0.0, "circular grid must satisfy r >= 0");

  if (const auto* G = std::get_if<SliceGrid>(&source)) {
    SYMMLAB_REQUIRE(G->mode == mode, "slice grid mode mismatch");
    SYMMLAB_REQUIRE(G->dom == grid, "distribution grid must match the slice grid");
  }
  if (std::get_if<PolygonSet>(&source) || mode == Mode::Steiner)
    SYMMLAB_REQUIRE(!grid.has_axis2 || std::get_if<SliceGrid>(&source),
                    "planar sources use a 1-D grid");

  GridFunction f = GridFunction::zeros(grid, mode);
  const int nj = grid.has_axis2 ? grid.n2 : 1;
  parallel_for(static_cast<size_t>(grid.n1) * nj, [&](size_t idx) {
    const int i = static_cast<int>(idx % grid.n1);
    const int j = static_cast<int>(idx / grid.n1);
    const double a = grid.center1(i);
    const double b = grid.center2(j);
    f.at(i, j) = mode == Mode::Circular
                     ? source_circular_slice(source, a, b).measure()
                     : source_vertical_slice(source, a, b).measure();
  });
  if (mode == Mode::Circular) check_mu_compatibility(f);
  return f;
}

}  // namespace symmlab
