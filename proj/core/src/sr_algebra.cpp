#include "psr/sr_algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace psr {

int BettiTable::max_homological_degree() const {
    int m = 0;
    for (const auto& [ij, v] : entries)
        if (v) m = std::max(m, ij.first);
    return m;
}

int BettiTable::max_internal_degree() const {
    int m = 0;
    for (const auto& [ij, v] : entries)
        if (v) m = std::max(m, ij.second);
    return m;
}

long long binomial(long long a, long long k) {
    if (k < 0 || a < 0 || k > a) return 0;
    k = std::min(k, a - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (a - k + i) / i;
    return r;
}

long long series_binomial(int m, int k) {
    if (k < 0) return 0;
    if (m == 0) return k == 0 ? 1 : 0;
    return binomial(static_cast<long long>(m) + k - 1, k);
}

namespace {

void check_cap(int n, const char* what) {
    if (n > kSubsetEnumerationCap)
        throw std::invalid_argument(std::string(what) + " enumerates all vertex subsets and requires n <= " +
                                    std::to_string(kSubsetEnumerationCap) + "; got n = " + std::to_string(n) +
                                    " (2^" + std::to_string(n) + " subsets)");
}

using Entries = std::map<std::pair<int, int>, long long>;

void merge(Entries& into, const Entries& from) {
    for (const auto& [ij, v] : from) into[ij] += v;
}

template <typename PerSubset>
Entries enumerate_subsets(int n, int max_j, int threads, PerSubset per_subset) {
    const std::uint64_t total = std::uint64_t{1} << n;
    auto worker = [&](std::uint64_t begin, std::uint64_t step) {
        Entries local;
        for (std::uint64_t w = begin; w < total; w += step) {
            if (max_j >= 0 && std::popcount(w) > max_j) continue;
            per_subset(w, local);
        }
        return local;
    };
    if (threads <= 1) return worker(0, 1);
    std::vector<Entries> partial(threads);
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k)
        pool.emplace_back([&, k] { partial[k] = worker(k, threads); });
    for (auto& th : pool) th.join();
    Entries out;
    for (const auto& e : partial) merge(out, e);
    return out;
}

}  // namespace

BettiTable hochster_table(const SimplicialComplex& complex, PrimeField field, int max_j,
                          int threads) {
    check_cap(complex.vertex_count(), "hochster_table");
    const int n = complex.vertex_count();
    BettiTable table;
    table.n = n;
    table.truncated = max_j >= 0 && max_j < n;
    table.max_j = table.truncated ? max_j : -1;
    table.entries = enumerate_subsets(n, max_j, threads, [&](std::uint64_t w, Entries& local) {
        const int j = std::popcount(w);
        const auto betti = reduced_betti(complex.induced(w), field);
        for (int q = -1; q + 1 < static_cast<int>(betti.size()); ++q) {
            const long long b = betti[q + 1];
            if (b) local[{j - q - 1, j}] += b;
        }
    });
    return table;
}

PersistentBettiTable persistent_hochster_table(const Filtration& filtration, double t,
                                               double t_prime, PrimeField field, int threads) {
    if (t > t_prime) throw std::invalid_argument("persistent_hochster_table requires t <= t_prime");
    const int n = filtration.complex().vertex_count();
    check_cap(n, "persistent_hochster_table");
    PersistentBettiTable out;
    out.t = t;
    out.t_prime = t_prime;
    out.field_modulus = field.p;
    out.table.n = n;
    out.table.entries = enumerate_subsets(n, -1, threads, [&](std::uint64_t w, Entries& local) {
        const int j = std::popcount(w);
        const Filtration restricted = filtration.restrict_to(w);
        const Barcode bc = persistence_barcode(restricted, field);
        for (int q = -1; q <= restricted.complex().dim(); ++q) {
            const long long r = persistent_rank(bc, restricted, q, t, t_prime);
            if (r) local[{j - q - 1, j}] += r;
        }
    });
    return out;
}

std::vector<long long> alternating_sums(const BettiTable& table) {
    std::vector<long long> b(static_cast<std::size_t>(table.n) + 1, 0);
    for (const auto& [ij, v] : table.entries) {
        const auto [i, j] = ij;
        if (j <= table.n) b[j] += (i % 2 == 0 ? v : -v);
    }
    return b;
}

HVector h_vector_from_betti(const BettiTable& table, int n, int d) {
    const auto b = alternating_sums(table);
    HVector h;
    h.coefficients.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int m = 0; m <= d; ++m)
        for (int j = 0; j <= m && j < static_cast<int>(b.size()); ++j)
            h.coefficients[m] += series_binomial(n - d, m - j) * b[j];
    return h;
}

FVector f_from_h(const HVector& h, int d) {
    if (static_cast<int>(h.coefficients.size()) != d + 1)
        throw std::invalid_argument("h-vector must have length d + 1");
    FVector f;
    f.coefficients.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= j; ++i)
            f.coefficients[j] += binomial(d - i, j - i) * h.coefficients[i];
    return f;
}

HVector h_from_f(const FVector& f, int d) {
    if (static_cast<int>(f.coefficients.size()) != d + 1)
        throw std::invalid_argument("f-vector must have length d + 1");
    if (f.coefficients[0] != 1) throw std::invalid_argument("f-vector must start with f_{-1} = 1");
    HVector h;
    h.coefficients.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= j; ++i) {
            const long long term = binomial(d - i, j - i) * f.coefficients[i];
            h.coefficients[j] += (j - i) % 2 == 0 ? term : -term;
        }
    return h;
}

FVector f_from_betti(const BettiTable& table, int n, int d) {
    const auto b = alternating_sums(table);
    FVector f;
    f.coefficients.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k)
        for (int j = 0; j <= k && j < static_cast<int>(b.size()); ++j) {
            long long inner = 0;
            for (int i = j; i <= k; ++i)
                inner += binomial(d - i, k - i) * series_binomial(n - d, i - j);
            f.coefficients[k] += b[j] * inner;
        }
    return f;
}

HVector persistent_h_vector(const Filtration& filtration, double t, double t_prime,
                            PrimeField field) {
    const auto pbt = persistent_hochster_table(filtration, t, t_prime, field);
    const int d = filtration.sublevel(t_prime).dim() + 1;
    return h_vector_from_betti(pbt.table, pbt.table.n, d);
}

FVector persistent_f_vector(const Filtration& filtration, double t, double t_prime,
                            PrimeField field) {
    const int d = filtration.sublevel(t_prime).dim() + 1;
    return f_from_h(persistent_h_vector(filtration, t, t_prime, field), d);
}

std::vector<long long> hilbert_numerator(const BettiTable& table) {
    auto b = alternating_sums(table);
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return b;
}

}  // namespace psr
