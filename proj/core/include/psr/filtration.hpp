#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "psr/simplicial.hpp"

namespace psr {

/// Strictly increasing finite sequence of parameter values at which the
/// Stanley-Reisner ideal of the sublevel complex changes.
struct CriticalValues {
    std::vector<double> values;
};

struct Atom {
    std::string element;
    std::array<double, 3> position;
};

struct PointCloud {
    std::vector<Atom> atoms;
};

/// Whether Vietoris-Rips filtration values are stored as simplex
/// diameters or half-diameters.
enum class Scale { Diameter, Radius };

/// A monotone assignment of a real value to every face of a complex.
class Filtration {
public:
    /// Validates monotonicity and hereditary closure of the key set.
    static Filtration from_explicit(int vertex_count,
                                    const std::vector<std::pair<Simplex, double>>& values);

    /// Vietoris-Rips filtration: faces are subsets of the (element-filtered)
    /// cloud with diameter <= 2 * max_radius and dimension <= max_dim;
    /// value(simplex) = diameter (or half under Scale::Radius).
    static Filtration vietoris_rips(const PointCloud& cloud, int max_dim, double max_radius,
                                    const std::optional<std::set<std::string>>& element_filter = {},
                                    Scale scale = Scale::Diameter);

    const SimplicialComplex& complex() const { return complex_; }
    double value(const Simplex& s) const;

    SimplicialComplex sublevel(double t) const;
    bool sublevel_empty(double t) const { return order_.empty() || t < order_.front().second; }

    CriticalValues critical_values(int precision = 9) const;

    /// Induced subcomplex filtration on the vertices of `vertex_mask`,
    /// relabeled like SimplicialComplex::induced.
    Filtration restrict_to(std::uint64_t vertex_mask) const;

    /// Faces with values, sorted by (value, dimension, lexicographic).
    const std::vector<std::pair<Simplex, double>>& ordered() const { return order_; }

    /// max over faces of |f - g|; throws if the complexes differ.
    static double sup_norm_distance(const Filtration& f, const Filtration& g);

private:
    Filtration() : complex_(0, false) {}
    void index(std::vector<std::pair<Simplex, double>> values);

    SimplicialComplex complex_;
    std::unordered_map<Simplex, double, SimplexHash> values_;
    std::vector<std::pair<Simplex, double>> order_;
};

/// Rounds to `precision` decimal digits; used to deduplicate critical values.
double round_to_precision(double x, int precision);

}  // namespace psr
