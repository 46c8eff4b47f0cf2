#include "psr/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace psr {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int mod_pow(long long b, long long e, int p) {
    long long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

int mod_inverse(int a, int p) { return mod_pow(a, p - 2, p); }

// Rank over GF(2) with rows packed into 64-bit blocks; pivots keyed by
// leading bit.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
    int rank = 0;
    std::unordered_map<int, std::vector<std::uint64_t>> pivots;
    auto leading_bit = [](const std::vector<std::uint64_t>& r) {
        for (int w = static_cast<int>(r.size()) - 1; w >= 0; --w)
            if (r[w]) return w * 64 + 63 - std::countl_zero(r[w]);
        return -1;
    };
    for (auto& r : rows) {
        int bit = leading_bit(r);
        while (bit >= 0) {
            auto it = pivots.find(bit);
            if (it == pivots.end()) break;
            for (std::size_t w = 0; w < r.size(); ++w) r[w] ^= it->second[w];
            bit = leading_bit(r);
        }
        if (bit >= 0) {
            pivots.emplace(bit, std::move(r));
            ++rank;
        }
    }
    return rank;
}

}  // namespace

PrimeField::PrimeField(int modulus) : p(modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
}

int gf_rank(std::vector<std::vector<int>> rows, int p) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows.size() && col < ncols; ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const int inv = mod_inverse(((rows[r][col] % p) + p) % p, p);
        for (std::size_t c = col; c < ncols; ++c)
            rows[r][c] = static_cast<int>(static_cast<long long>(((rows[r][c] % p) + p) % p) * inv % p);
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == r) continue;
            const int f = ((rows[rr][col] % p) + p) % p;
            if (!f) continue;
            for (std::size_t c = col; c < ncols; ++c)
                rows[rr][c] = static_cast<int>((((rows[rr][c] - static_cast<long long>(f) * rows[r][c]) % p) + p) % p);
        }
        ++r;
        ++rank;
    }
    return rank;
}

namespace {

// Rank of the boundary map d_q : C_q -> C_{q-1} of the augmented chain
// complex (C_{-1} = k, d_0 v = []).
int boundary_rank(const SimplicialComplex& complex, int q, int p) {
    const auto& upper = complex.faces_of_dim(q);
    if (upper.empty()) return 0;
    if (q == 0) return 1;  // augmentation map is onto k

    const auto& lower_faces = complex.faces_of_dim(q - 1);
    std::unordered_map<Simplex, int, SimplexHash> lower;
    for (std::size_t i = 0; i < lower_faces.size(); ++i) lower.emplace(lower_faces[i], static_cast<int>(i));

    if (p == 2) {
        const std::size_t blocks = (lower_faces.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows;
        rows.reserve(upper.size());
        for (const auto& s : upper) {
            std::vector<std::uint64_t> row(blocks, 0);
            for (std::size_t k = 0; k < s.size(); ++k) {
                const int i = lower.at(s.face_omitting(k));
                row[i / 64] ^= std::uint64_t{1} << (i % 64);
            }
            rows.push_back(std::move(row));
        }
        return gf2_rank(std::move(rows));
    }

    std::vector<std::vector<int>> rows;
    rows.reserve(upper.size());
    for (const auto& s : upper) {
        std::vector<int> row(lower_faces.size(), 0);
        int sign = 1;
        for (std::size_t k = 0; k < s.size(); ++k) {
            row[lower.at(s.face_omitting(k))] = sign > 0 ? 1 : p - 1;
            sign = -sign;
        }
        rows.push_back(std::move(row));
    }
    return gf_rank(std::move(rows), p);
}

}  // namespace

std::vector<long long> reduced_betti(const SimplicialComplex& complex, PrimeField field) {
    const int d = complex.dim();
    std::vector<long long> betti(static_cast<std::size_t>(d + 2), 0);
    std::vector<int> ranks(static_cast<std::size_t>(d + 2), 0);  // ranks[q] = rank d_q
    for (int q = 0; q <= d; ++q) ranks[q] = boundary_rank(complex, q, field.p);
    betti[0] = 1 - (complex.is_empty() ? 0 : 1);  // degree -1
    for (int q = 0; q <= d; ++q) {
        const long long dim_cq = static_cast<long long>(complex.faces_of_dim(q).size());
        const long long next = (q + 1 <= d) ? ranks[q + 1] : 0;
        betti[q + 1] = dim_cq - ranks[q] - next;
    }
    return betti;
}

namespace {

// Sparse column over Z/p: (row, coeff) sorted by row ascending, coeff in [1, p).
using Column = std::vector<std::pair<int, int>>;

Column subtract_scaled(const Column& a, const Column& b, int factor, int p) {
    // a - factor * b
    Column out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            const int c = static_cast<int>(((-static_cast<long long>(factor) * b[j].second) % p + p) % p);
            if (c) out.emplace_back(b[j].first, c);
            ++j;
        } else {
            const int c = static_cast<int>((((a[i].second - static_cast<long long>(factor) * b[j].second) % p) + p) % p);
            if (c) out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Barcode persistence_barcode(const Filtration& filtration, PrimeField field, int max_dim) {
    const int p = field.p;
    const auto& order = filtration.ordered();

    std::unordered_map<Simplex, int, SimplexHash> index;
    std::vector<int> kept;  // indices into order, dim <= max_dim + 1
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (max_dim >= 0 && order[i].first.dim() > max_dim + 1) continue;
        index.emplace(order[i].first, static_cast<int>(kept.size()));
        kept.push_back(static_cast<int>(i));
    }

    std::vector<Column> reduced(kept.size());
    std::unordered_map<int, int> low_owner;  // low row -> column owning it
    std::vector<int> killer(kept.size(), -1);

    for (std::size_t j = 0; j < kept.size(); ++j) {
        const Simplex& s = order[kept[j]].first;
        Column col;
        if (s.size() > 1) {
            int sign = 1;
            for (std::size_t k = 0; k < s.size(); ++k) {
                col.emplace_back(index.at(s.face_omitting(k)), sign > 0 ? 1 : p - 1);
                sign = -sign;
            }
            std::sort(col.begin(), col.end());
        }
        while (!col.empty()) {
            const int low = col.back().first;
            auto it = low_owner.find(low);
            if (it == low_owner.end()) break;
            const Column& other = reduced[it->second];
            const int factor = static_cast<int>(static_cast<long long>(col.back().second) *
                                                mod_inverse(other.back().second, p) % p);
            col = subtract_scaled(col, other, factor, p);
        }
        if (!col.empty()) {
            const int low = col.back().first;
            low_owner.emplace(low, static_cast<int>(j));
            killer[low] = static_cast<int>(j);
        }
        reduced[j] = std::move(col);
    }

    Barcode bc;
    for (std::size_t j = 0; j < kept.size(); ++j) {
        if (!reduced[j].empty()) continue;  // j created a class
        const Simplex& s = order[kept[j]].first;
        if (max_dim >= 0 && s.dim() > max_dim) continue;
        const double birth = order[kept[j]].second;
        const double death = killer[j] >= 0 ? order[kept[killer[j]]].second : kInfinity;
        if (death > birth) bc.intervals.push_back({s.dim(), birth, death});
    }
    std::sort(bc.intervals.begin(), bc.intervals.end(), [](const Interval& a, const Interval& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return bc;
}

long long persistent_rank(const Barcode& barcode, const Filtration& filtration, int q, double t,
                          double t_prime) {
    if (t > t_prime) throw std::invalid_argument("persistent_rank requires t <= t_prime");
    if (q < -1) return 0;
    if (q == -1) return filtration.sublevel_empty(t_prime) ? 1 : 0;
    long long count = 0;
    for (const Interval& iv : barcode.intervals)
        if (iv.dim == q && iv.birth <= t && iv.death > t_prime) ++count;
    if (q == 0) {
        // reduced homology: one component class is the augmentation image
        if (filtration.sublevel_empty(t)) return 0;
        return count - 1;
    }
    return count;
}

long long persistent_rank(const Filtration& filtration, int q, double t, double t_prime,
                          PrimeField field) {
    if (t > t_prime) throw std::invalid_argument("persistent_rank requires t <= t_prime");
    const Barcode bc = persistence_barcode(filtration, field, q + 1);
    return persistent_rank(bc, filtration, q, t, t_prime);
}

}  // namespace psr
