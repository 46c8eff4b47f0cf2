#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "psr/facet.hpp"
#include "psr/filtration.hpp"
#include "psr/homology.hpp"
#include "psr/pipeline.hpp"
#include "psr/sr_algebra.hpp"

namespace psr {

/// Raised for malformed input files; messages carry line/field diagnostics.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Standard XYZ: atom count, comment line, then `Element x y z` records.
/// Element symbols are case-normalized (first letter upper, rest lower).
PointCloud parse_xyz(const std::string& path);

/// Face-list JSON {"vertices": n, "faces": [[v,...],...]} listing facets;
/// hereditary closure is taken on load.
SimplicialComplex load_complex_json(const std::string& text);
std::string complex_to_json(const SimplicialComplex& complex);

std::string filtration_to_json(const Filtration& filtration, int precision = 9);
Filtration load_filtration_json(const std::string& text);

std::string barcode_to_json(const Barcode& barcode, int precision = 9);
Barcode load_barcode_json(const std::string& text);

std::string facet_barcode_to_json(const FacetBarcode& barcode, int precision = 9);
FacetBarcode load_facet_barcode_json(const std::string& text);

std::string diagram_to_json(const FacetDiagram& dgm, int precision = 9);
FacetDiagram load_diagram_json(const std::string& text);

std::string betti_table_to_json(const BettiTable& table);
BettiTable load_betti_table_json(const std::string& text);

/// Macaulay2-style CSV: rows indexed by j - i, columns by i.
std::string betti_table_to_csv(const BettiTable& table);

std::string critical_values_to_json(const CriticalValues& cv, int precision = 9);
CriticalValues load_critical_values_json(const std::string& text);

std::string distance_matrix_to_csv(const DistanceMatrix& matrix, int precision = 9);
DistanceMatrix load_distance_matrix_csv(const std::string& text);

struct ManifestEntry {
    std::string id;
    std::string label;
    std::string path;
};
/// Dataset manifest CSV: header `id,label,path`.
std::vector<ManifestEntry> parse_manifest_csv(const std::string& path);

std::string eval_summary_to_json(const EvalSummary& summary, int precision = 9);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Fixed-precision decimal formatting with trailing zeros trimmed.
std::string format_number(double x, int precision);

}  // namespace psr
