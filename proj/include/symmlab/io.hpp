#pragma once

#include <iosfwd>
#include <string>

#include "symmlab/bv.hpp"
#include "symmlab/diagnostics.hpp"
#include "symmlab/slice_grid.hpp"
#include "symmlab/symmetral.hpp"

namespace symmlab::io {

/// Parses a set description: {"kind": "polygon" | "arc_family" |
/// "slice_grid" | "generator", ...}. Generators expand to their fixture.
SetSource parse_set(const std::string& json_text);
SetSource load_set(const std::string& path);

std::string encode_set(const SetSource& src);
std::string encode_polygon(const PolygonSet& P);
std::string encode_arc_family(const ArcFamilySet& A);
std::string encode_slice_grid(const SliceGrid& G);

/// Distribution CSV: header r,z,value (z omitted for planar grids;
/// steiner mode uses x as the first column name).
void write_grid_csv(std::ostream& os, const GridFunction& f);

/// Sigma measure: JSON with ac density, support and atoms.
std::string encode_sigma(const SigmaMeasure& s);
void write_sigma_csv(std::ostream& os, const SigmaMeasure& s);

std::string encode_report(const DiagnosticsReport& rep);

void write_density_csv(std::ostream& os, const DensityProfile& prof);

/// Static SVG: boundary, slice sample circles, normal arrows colored by
/// the circularised components.
std::string render_svg(const SetSource& src, int n_slice_samples = 4);

/// Machine-readable error envelope printed on stderr by the CLI.
std::string encode_error(const std::string& kind, const std::string& message);

}  // namespace symmlab::io
