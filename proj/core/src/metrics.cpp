#include "psr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace psr {

namespace {

enum class Component { Interior, LeftBoundary, TopBoundary, Corner };

Component component_of(const ExtendedPoint& u) {
    const bool b_inf = std::isinf(u.birth) && u.birth < 0;
    const bool d_inf = std::isinf(u.death) && u.death > 0;
    if (b_inf && d_inf) return Component::Corner;
    if (b_inf) return Component::LeftBoundary;
    if (d_inf) return Component::TopBoundary;
    return Component::Interior;
}

}  // namespace

double dist_inf(const ExtendedPoint& u, const ExtendedPoint& v) {
    const Component cu = component_of(u), cv = component_of(v);
    if (cu != cv) return kInfinity;
    switch (cu) {
        case Component::Corner:
            return 0.0;
        case Component::LeftBoundary:
            return std::abs(u.death - v.death);
        case Component::TopBoundary:
            return std::abs(u.birth - v.birth);
        case Component::Interior:
            return std::max(std::abs(u.birth - v.birth), std::abs(u.death - v.death));
    }
    return kInfinity;
}

double diagonal_dist(const ExtendedPoint& u) {
    if (component_of(u) != Component::Interior) return kInfinity;
    return (u.death - u.birth) / 2.0;
}

namespace {

// delta-matching feasibility for the interior problem: every point of a
// and b is either matched within delta or within delta of the diagonal.
// Classic reduction: augment each side with one diagonal slot per point of
// the other side and ask for a perfect matching (Kuhn's algorithm).
bool interior_feasible(const std::vector<ExtendedPoint>& a, const std::vector<ExtendedPoint>& b,
                       double delta) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    const int left = na + nb;   // a points, then diagonal slots for b
    const int right = nb + na;  // b points, then diagonal slots for a
    std::vector<std::vector<int>> adj(left);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j)
            if (dist_inf(a[i], b[j]) <= delta) adj[i].push_back(j);
        if (diagonal_dist(a[i]) <= delta) adj[i].push_back(nb + i);
    }
    for (int j = 0; j < nb; ++j) {
        if (diagonal_dist(b[j]) <= delta) adj[na + j].push_back(j);
        for (int i = 0; i < na; ++i) adj[na + j].push_back(nb + i);  // diag-diag always fine
    }

    std::vector<int> match_right(right, -1);
    std::vector<char> used;
    std::function<bool(int)> augment = [&](int u) {
        for (int v : adj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            if (match_right[v] < 0 || augment(match_right[v])) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int u = 0; u < left; ++u) {
        used.assign(right, 0);
        if (augment(u)) ++matched;
    }
    return matched == left;
}

// Optimal max-difference matching between equal-size 1-D point sets is the
// sorted pairing.
double boundary_distance(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size()) return kInfinity;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    double m = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) m = std::max(m, std::abs(xs[i] - ys[i]));
    return m;
}

}  // namespace

double bottleneck(const std::vector<ExtendedPoint>& a, const std::vector<ExtendedPoint>& b) {
    std::vector<ExtendedPoint> ia, ib;
    std::vector<double> la, lb, ta, tb;
    long long corner_a = 0, corner_b = 0;
    for (const auto& p : a) switch (component_of(p)) {
            case Component::Interior: ia.push_back(p); break;
            case Component::LeftBoundary: la.push_back(p.death); break;
            case Component::TopBoundary: ta.push_back(p.birth); break;
            case Component::Corner: ++corner_a; break;
        }
    for (const auto& p : b) switch (component_of(p)) {
            case Component::Interior: ib.push_back(p); break;
            case Component::LeftBoundary: lb.push_back(p.death); break;
            case Component::TopBoundary: tb.push_back(p.birth); break;
            case Component::Corner: ++corner_b; break;
        }

    if (corner_a != corner_b) return kInfinity;
    const double d_left = boundary_distance(std::move(la), std::move(lb));
    const double d_top = boundary_distance(std::move(ta), std::move(tb));
    if (std::isinf(d_left) || std::isinf(d_top)) return kInfinity;

    // Interior: exact binary search over the candidate distance set.
    std::vector<double> candidates{0.0};
    for (const auto& p : ia) candidates.push_back(diagonal_dist(p));
    for (const auto& q : ib) candidates.push_back(diagonal_dist(q));
    for (const auto& p : ia)
        for (const auto& q : ib) candidates.push_back(dist_inf(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    if (!interior_feasible(ia, ib, candidates[hi])) return kInfinity;  // unreachable for finite sets
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (interior_feasible(ia, ib, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max({candidates[lo], d_left, d_top});
}

std::vector<ExtendedPoint> diagram_points(const FacetDiagram& dgm) {
    std::vector<ExtendedPoint> pts;
    for (const DiagramPoint& p : dgm.points)
        for (long long m = 0; m < p.multiplicity; ++m) pts.push_back({p.birth, p.death});
    return pts;
}

double hausdorff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff requires non-empty sets");
    auto directed = [](const std::vector<double>& x, const std::vector<double>& y) {
        double sup = 0;
        for (double v : x) {
            double best = kInfinity;
            for (double w : y) best = std::min(best, std::abs(v - w));
            sup = std::max(sup, best);
        }
        return sup;
    };
    return std::max(directed(a, b), directed(b, a));
}

StabilityReport stability_check(const Filtration& f, const Filtration& g, double tolerance) {
    const double sup = Filtration::sup_norm_distance(f, g);  // throws on mismatched complexes
    const double db = bottleneck(diagram_points(multiplicities(f)), diagram_points(multiplicities(g)));
    return {db, sup, tolerance, db <= sup + tolerance};
}

}  // namespace psr
