#pragma once

#include <vector>

#include "psr/facet.hpp"
#include "psr/filtration.hpp"

namespace psr {

/// A point of the extended half-plane; coordinates may be -inf / +inf.
struct ExtendedPoint {
    double birth;
    double death;
};

/// The paper's d-infinity on the extended half-plane: sup-metric inside each
/// component, |death difference| on the infinite boundaries, +infinity
/// across components.
double dist_inf(const ExtendedPoint& u, const ExtendedPoint& v);

/// Distance to the diagonal, (death - birth) / 2; +infinity for boundary
/// points.
double diagonal_dist(const ExtendedPoint& u);

/// Bottleneck distance between two finite multisets of extended points.
/// Exact: binary search over the finite candidate set with bipartite
/// matching feasibility.
double bottleneck(const std::vector<ExtendedPoint>& a, const std::vector<ExtendedPoint>& b);

std::vector<ExtendedPoint> diagram_points(const FacetDiagram& dgm);

/// Hausdorff distance between two non-empty finite real sets.
double hausdorff(const std::vector<double>& a, const std::vector<double>& b);

struct StabilityReport {
    double bottleneck_distance;
    double sup_norm;
    double tolerance;
    bool pass;
};

/// Checks d_b(dgm(f), dgm(g)) <= ||f - g||_inf + tolerance on facet
/// persistence diagrams of two filtrations of the same complex.
StabilityReport stability_check(const Filtration& f, const Filtration& g, double tolerance = 1e-9);

}  // namespace psr
