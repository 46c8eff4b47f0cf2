#pragma once

#include <string>
#include <vector>

#include "psr/facet.hpp"
#include "psr/homology.hpp"

namespace psr {

/// Barcode chart, one lane per bar, lanes grouped by dimension.
/// Infinite deaths render as an arrow glyph past the right margin.
std::string barcode_svg(const Barcode& barcode, int precision = 9);
std::string facet_barcode_svg(const FacetBarcode& barcode, int precision = 9);

/// Persistence diagram scatter with the diagonal; point area scales with
/// multiplicity, infinite deaths sit on a marked top rail.
std::string diagram_svg(const FacetDiagram& dgm, int precision = 9);

/// Right-continuous step curves over a shared x grid, one polyline per
/// series. Series lengths must match the grid.
std::string step_curve_svg(const std::vector<double>& xs,
                           const std::vector<std::vector<long long>>& series,
                           const std::vector<std::string>& names, int precision = 9);

}  // namespace psr
