#pragma once

#include <vector>

#include "psr/filtration.hpp"
#include "psr/homology.hpp"
#include "psr/simplicial.hpp"

namespace psr {

/// The prime monomial ideal P_A generated by the variables outside A.
struct FacetPrime {
    Simplex support;         // the face A
    int ambient_vertices;    // n
    std::vector<Vertex> generators() const;
    bool operator==(const FacetPrime& o) const {
        return support == o.support && ambient_vertices == o.ambient_vertices;
    }
};

/// Lifespan [birth, death) during which P_support is a minimal prime of the
/// sublevel Stanley-Reisner ideal.
struct FacetBar {
    Simplex face;
    double birth;
    double death;  // kInfinity when the face is a facet of the final complex
    int dim() const { return face.dim(); }
    bool operator==(const FacetBar& o) const = default;
};

struct FacetBarcode {
    std::vector<FacetBar> bars;
};

struct DiagramPoint {
    double birth;
    double death;
    long long multiplicity;
};

/// Multiset of (birth, death) points with multiplicities; the diagonal is
/// implicit.
struct FacetDiagram {
    std::vector<DiagramPoint> points;
};

/// One prime per facet; their intersection is the Stanley-Reisner ideal.
std::vector<FacetPrime> facet_prime_decomposition(const SimplicialComplex& complex);

/// birth = f(sigma); death = min value of a codimension-1 coface (or
/// +infinity). Zero-length bars are dropped unless keep_empty_bars is set.
FacetBarcode facet_barcode(const Filtration& filtration, bool keep_empty_bars = false);

/// Count of bars alive on [t, t_prime]: birth <= t and death > t_prime.
long long facet_persistent_betti(const FacetBarcode& barcode, double t, double t_prime);

/// Number of facets of sublevel(t) that are still facets of
/// sublevel(t_prime) -- computed directly from the two sublevel complexes,
/// independently of facet_barcode.
long long facet_count_surviving(const Filtration& filtration, double t, double t_prime);

/// Explicit facet persistence module map v_t^{t'} as a matrix over the
/// facet-prime bases of the two sublevels; returns its rank.
long long module_rank_oracle(const Filtration& filtration, double t, double t_prime);

/// Facet persistence diagram via interleaved-sample multiplicities at the
/// Stanley-Reisner critical values.
FacetDiagram multiplicities(const Filtration& filtration, int precision = 9);

/// Endpoint multiset of a barcode as a diagram, for cross-checks and output.
FacetDiagram diagram_from_barcode(const FacetBarcode& barcode);

}  // namespace psr
