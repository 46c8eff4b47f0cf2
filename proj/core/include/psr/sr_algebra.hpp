#pragma once

#include <map>
#include <utility>
#include <vector>

#include "psr/filtration.hpp"
#include "psr/homology.hpp"
#include "psr/simplicial.hpp"

namespace psr {

/// Graded Betti numbers beta_{i,j} of a Stanley-Reisner ring, stored
/// sparsely by (homological degree i, internal degree j).
struct BettiTable {
    int n = 0;  // ambient variable count
    std::map<std::pair<int, int>, long long> entries;
    bool truncated = false;  // true when computed under a degree cap
    int max_j = -1;          // the cap, when truncated

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int max_homological_degree() const;
    int max_internal_degree() const;
};

struct PersistentBettiTable {
    BettiTable table;
    double t = 0;
    double t_prime = 0;
    int field_modulus = 2;
};

/// (h_0, ..., h_d); persistent variants may carry negative entries.
struct HVector {
    std::vector<long long> coefficients;
};

/// (f_{-1}, f_0, ..., f_{d-1}).
struct FVector {
    std::vector<long long> coefficients;
};

/// beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(Delta_W; k), enumerating
/// all vertex subsets. Requires n <= kSubsetEnumerationCap. An optional cap
/// max_j restricts the sum to |W| <= max_j (the result is then flagged
/// truncated). threads > 1 partitions the subset enumeration.
BettiTable hochster_table(const SimplicialComplex& complex, PrimeField field = PrimeField{},
                          int max_j = -1, int threads = 1);

/// beta^{t,t'}_{i,i+j}: for every W the rank of the inclusion-induced map
/// in degree j-1 on the induced subcomplex filtration, summed by |W|.
PersistentBettiTable persistent_hochster_table(const Filtration& filtration, double t,
                                               double t_prime, PrimeField field = PrimeField{},
                                               int threads = 1);

/// B_j = sum_i (-1)^i beta_{i,j}, j = 0..n.
std::vector<long long> alternating_sums(const BettiTable& table);

/// h_m = sum_j C(n-d+m-j-1, m-j) B_j under the power-series convention
/// that (1-s)^0 = 1.
HVector h_vector_from_betti(const BettiTable& table, int n, int d);

FVector f_from_h(const HVector& h, int d);
HVector h_from_f(const FVector& f, int d);

/// Direct route from the Betti table to the f-vector (not via f_from_h).
FVector f_from_betti(const BettiTable& table, int n, int d);

HVector persistent_h_vector(const Filtration& filtration, double t, double t_prime,
                            PrimeField field = PrimeField{});
FVector persistent_f_vector(const Filtration& filtration, double t, double t_prime,
                            PrimeField field = PrimeField{});

/// Coefficients of Q(s) = sum_j B_j s^j, the Hilbert series numerator over
/// (1-s)^n.
std::vector<long long> hilbert_numerator(const BettiTable& table);

long long binomial(long long a, long long k);
/// Coefficient of s^k in (1-s)^{-m}, m >= 0.
long long series_binomial(int m, int k);

}  // namespace psr
