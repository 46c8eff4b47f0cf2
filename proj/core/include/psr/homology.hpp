#pragma once

#include <limits>
#include <vector>

#include "psr/filtration.hpp"
#include "psr/simplicial.hpp"

namespace psr {

/// Coefficient field Z/p.
struct PrimeField {
    int p = 2;
    explicit PrimeField(int modulus = 2);
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Interval {
    int dim;  // -1 is the reduced degree of the empty complex
    double birth;
    double death;  // kInfinity for essential classes
    bool essential() const { return death == kInfinity; }
};

struct Barcode {
    std::vector<Interval> intervals;
};

/// Reduced Betti numbers (beta_{-1}, beta_0, ..., beta_dim); index 0 holds
/// degree -1, which is 1 exactly for the empty complex.
std::vector<long long> reduced_betti(const SimplicialComplex& complex, PrimeField field = PrimeField{});

/// Interval decomposition of the sublevel persistent homology, by standard
/// column reduction with faces ordered by (value, dimension, lexicographic).
/// Dimension-0 intervals follow the unreduced convention (one essential bar
/// per component of the final complex). Zero-length intervals are dropped.
/// max_dim < 0 means no cap.
Barcode persistence_barcode(const Filtration& filtration, PrimeField field = PrimeField{},
                            int max_dim = -1);

/// Rank of the inclusion-induced map on degree-q reduced homology from
/// sublevel t to sublevel t_prime.
long long persistent_rank(const Filtration& filtration, int q, double t, double t_prime,
                          PrimeField field = PrimeField{});

/// Same, reusing a barcode computed from the filtration.
long long persistent_rank(const Barcode& barcode, const Filtration& filtration, int q, double t,
                          double t_prime);

/// Rank of a dense matrix over Z/p; rows given as vectors of residues.
int gf_rank(std::vector<std::vector<int>> rows, int p);

}  // namespace psr
