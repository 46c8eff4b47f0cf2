#include "psr/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace psr {

double round_to_precision(double x, int precision) {
    if (!std::isfinite(x)) return x;
    const double scale = std::pow(10.0, precision);
    return std::round(x * scale) / scale;
}

void Filtration::index(std::vector<std::pair<Simplex, double>> values) {
    std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;  // Simplex::operator< orders by (dim, lex)
    });
    order_ = std::move(values);
    values_.reserve(order_.size());
    for (const auto& [s, v] : order_) values_.emplace(s, v);
}

Filtration Filtration::from_explicit(int vertex_count,
                                     const std::vector<std::pair<Simplex, double>>& values) {
    Filtration f;
    f.complex_ = SimplicialComplex(vertex_count, /*insert_vertices=*/false);
    std::unordered_map<Simplex, double, SimplexHash> map;
    for (const auto& [s, v] : values) {
        if (s.empty()) throw std::invalid_argument("filtration value given for the empty face");
        auto [it, inserted] = map.emplace(s, v);
        if (!inserted && it->second != v)
            throw std::invalid_argument("conflicting values for face " + s.to_string());
    }
    for (const auto& [s, v] : map) {
        f.complex_.insert_face(s);
        for (std::size_t k = 0; s.size() > 1 && k < s.size(); ++k) {
            const Simplex tau = s.face_omitting(k);
            auto it = map.find(tau);
            if (it == map.end())
                throw std::invalid_argument("face " + tau.to_string() +
                                            " of " + s.to_string() + " has no filtration value");
            if (it->second > v)
                throw std::invalid_argument("monotonicity violation: f(" + tau.to_string() +
                                            ") = " + std::to_string(it->second) + " > f(" +
                                            s.to_string() + ") = " + std::to_string(v));
        }
    }
    f.index({map.begin(), map.end()});
    return f;
}

Filtration Filtration::vietoris_rips(const PointCloud& cloud, int max_dim, double max_radius,
                                     const std::optional<std::set<std::string>>& element_filter,
                                     Scale scale) {
    if (max_dim < 0) throw std::invalid_argument("max_dim must be non-negative");
    if (max_radius <= 0) throw std::invalid_argument("max_radius must be positive");

    std::vector<std::array<double, 3>> pts;
    for (const Atom& a : cloud.atoms)
        if (!element_filter || element_filter->count(a.element)) pts.push_back(a.position);
    if (pts.empty()) throw std::invalid_argument("point cloud is empty after element filtering");

    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double s = 0;
            for (int c = 0; c < 3; ++c) {
                const double d = pts[i][c] - pts[j][c];
                s += d * d;
            }
            dist[i][j] = dist[j][i] = std::sqrt(s);
        }

    const double threshold = 2.0 * max_radius;  // diameter bound
    std::vector<std::pair<Simplex, double>> values;
    // Incremental expansion: extend each simplex by vertices above its max.
    std::function<void(std::vector<Vertex>&, double)> expand = [&](std::vector<Vertex>& cur,
                                                                   double diameter) {
        values.emplace_back(Simplex(cur), diameter);
        if (static_cast<int>(cur.size()) - 1 >= max_dim) return;
        for (Vertex v = cur.back() + 1; v < n; ++v) {
            double d = diameter;
            bool ok = true;
            for (Vertex u : cur) {
                if (dist[u][v] > threshold) {
                    ok = false;
                    break;
                }
                d = std::max(d, dist[u][v]);
            }
            if (!ok) continue;
            cur.push_back(v);
            expand(cur, d);
            cur.pop_back();
        }
    };
    std::vector<Vertex> cur;
    for (Vertex v = 0; v < n; ++v) {
        cur = {v};
        expand(cur, 0.0);
    }

    if (scale == Scale::Radius)
        for (auto& [s, v] : values) v /= 2.0;

    Filtration f;
    f.complex_ = SimplicialComplex(n, /*insert_vertices=*/false);
    for (const auto& [s, v] : values) f.complex_.insert_face(s);
    f.index(std::move(values));
    return f;
}

double Filtration::value(const Simplex& s) const {
    auto it = values_.find(s);
    if (it == values_.end())
        throw std::invalid_argument("face " + s.to_string() + " not in filtration");
    return it->second;
}

SimplicialComplex Filtration::sublevel(double t) const {
    SimplicialComplex sub(complex_.vertex_count(), /*insert_vertices=*/false);
    for (const auto& [s, v] : order_) {
        if (v > t) break;
        sub.insert_face(s);
    }
    return sub;
}

CriticalValues Filtration::critical_values(int precision) const {
    CriticalValues cv;
    for (const auto& [s, v] : order_) {
        const double r = round_to_precision(v, precision);
        if (cv.values.empty() || cv.values.back() != r) cv.values.push_back(r);
    }
    return cv;
}

Filtration Filtration::restrict_to(std::uint64_t vertex_mask) const {
    std::vector<Vertex> relabel(complex_.vertex_count(), -1);
    int m = 0;
    for (Vertex v = 0; v < complex_.vertex_count(); ++v)
        if (vertex_mask >> v & 1) relabel[v] = m++;
    Filtration f;
    f.complex_ = SimplicialComplex(m, /*insert_vertices=*/false);
    std::vector<std::pair<Simplex, double>> values;
    for (const auto& [s, v] : order_) {
        if ((s.mask() & ~vertex_mask) != 0) continue;
        std::vector<Vertex> w;
        w.reserve(s.size());
        for (Vertex u : s.vertices()) w.push_back(relabel[u]);
        Simplex rs(std::move(w));
        f.complex_.insert_face(rs);
        values.emplace_back(std::move(rs), v);
    }
    f.index(std::move(values));
    return f;
}

double Filtration::sup_norm_distance(const Filtration& f, const Filtration& g) {
    if (!(f.complex_ == g.complex_))
        throw std::invalid_argument("sup_norm_distance requires filtrations on the same complex");
    double m = 0;
    for (const auto& [s, v] : f.order_) m = std::max(m, std::abs(v - g.value(s)));
    return m;
}

}  // namespace psr
