#include "psr/facet.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace psr {

std::vector<Vertex> FacetPrime::generators() const {
    std::vector<Vertex> gens;
    for (Vertex v = 0; v < ambient_vertices; ++v)
        if (!support.has_vertex(v)) gens.push_back(v);
    return gens;
}

std::vector<FacetPrime> facet_prime_decomposition(const SimplicialComplex& complex) {
    std::vector<FacetPrime> primes;
    for (const Simplex& f : complex.facets()) primes.push_back({f, complex.vertex_count()});
    return primes;
}

FacetBarcode facet_barcode(const Filtration& filtration, bool keep_empty_bars) {
    const SimplicialComplex& complex = filtration.complex();
    FacetBarcode bc;
    for (const auto& [s, birth] : filtration.ordered()) {
        double death = kInfinity;
        for (Vertex v = 0; v < complex.vertex_count(); ++v) {
            if (s.has_vertex(v)) continue;
            const Simplex coface = s.with_vertex(v);
            if (complex.contains(coface)) death = std::min(death, filtration.value(coface));
        }
        if (death > birth || keep_empty_bars) bc.bars.push_back({s, birth, death});
    }
    std::sort(bc.bars.begin(), bc.bars.end(), [](const FacetBar& a, const FacetBar& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.death != b.death) return a.death < b.death;
        return a.face < b.face;
    });
    return bc;
}

long long facet_persistent_betti(const FacetBarcode& barcode, double t, double t_prime) {
    if (t > t_prime) throw std::invalid_argument("facet_persistent_betti requires t <= t_prime");
    long long count = 0;
    for (const FacetBar& bar : barcode.bars)
        if (bar.birth <= t && bar.death > t_prime) ++count;
    return count;
}

long long facet_count_surviving(const Filtration& filtration, double t, double t_prime) {
    if (t > t_prime) throw std::invalid_argument("facet_count_surviving requires t <= t_prime");
    const SimplicialComplex at_t = filtration.sublevel(t);
    const SimplicialComplex at_t2 = filtration.sublevel(t_prime);
    long long count = 0;
    for (const Simplex& f : at_t.facets())
        if (at_t2.is_facet(f)) ++count;
    return count;
}

long long module_rank_oracle(const Filtration& filtration, double t, double t_prime) {
    if (t > t_prime) throw std::invalid_argument("module_rank_oracle requires t <= t_prime");
    const auto source = facet_prime_decomposition(filtration.sublevel(t));
    const auto target = facet_prime_decomposition(filtration.sublevel(t_prime));
    // v_t^{t'} sends a basis prime to itself when still minimal, else to 0.
    std::vector<std::vector<int>> matrix(source.size(), std::vector<int>(target.size(), 0));
    for (std::size_t c = 0; c < source.size(); ++c)
        for (std::size_t r = 0; r < target.size(); ++r)
            if (source[c] == target[r]) matrix[c][r] = 1;
    return gf_rank(std::move(matrix), 2);
}

FacetDiagram multiplicities(const Filtration& filtration, int precision) {
    const auto critical = filtration.critical_values(precision).values;
    const int n = static_cast<int>(critical.size());
    FacetDiagram dgm;
    if (n == 0) return dgm;

    // Interleaved samples b_{-1} < b_0 < alpha_1 < b_1 < alpha_2 < ... <
    // alpha_n < b_n < b_{n+1}; samples[k + 1] holds b_k. Values below
    // alpha_1 stand in for -infinity (empty sublevel), values above
    // alpha_n for +infinity (full complex).
    std::vector<double> samples(static_cast<std::size_t>(n) + 3);
    samples[0] = critical.front() - 1.0;   // b_{-1}
    samples[1] = critical.front() - 0.5;   // b_0
    for (int k = 1; k < n; ++k) samples[k + 1] = (critical[k - 1] + critical[k]) / 2.0;
    samples[n + 1] = critical.back() + 1.0;  // b_n
    samples[n + 2] = critical.back() + 2.0;  // b_{n+1}

    auto beta = [&](int sub_idx, int super_idx) -> long long {
        // b_{n+1} is a formal +infinity: no prime remains minimal beyond
        // every parameter, so beta to b_{n+1} vanishes. This is what makes
        // essential bars land at (alpha_i, +infinity) with the right count.
        if (super_idx == n + 2) return 0;
        return facet_count_surviving(filtration, samples[sub_idx], samples[super_idx]);
    };
    auto alpha = [&](int i) {
        if (i == n + 1) return kInfinity;
        return critical[static_cast<std::size_t>(i) - 1];
    };

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n + 1; ++j) {
            // mu_i^j with b_k at samples[k + 1]
            const long long mu = beta(i, j + 1) - beta(i + 1, j + 1) + beta(i + 1, j) - beta(i, j);
            if (mu != 0) dgm.points.push_back({alpha(i), alpha(j), mu});
        }
    }
    std::sort(dgm.points.begin(), dgm.points.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return dgm;
}

FacetDiagram diagram_from_barcode(const FacetBarcode& barcode) {
    std::map<std::pair<double, double>, long long> acc;
    for (const FacetBar& bar : barcode.bars)
        if (bar.death > bar.birth) ++acc[{bar.birth, bar.death}];
    FacetDiagram dgm;
    for (const auto& [bd, m] : acc) dgm.points.push_back({bd.first, bd.second, m});
    return dgm;
}

}  // namespace psr
