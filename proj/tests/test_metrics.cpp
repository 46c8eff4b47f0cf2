#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "psr/metrics.hpp"

using psr::ExtendedPoint;
using psr::Filtration;
using psr::Simplex;
using psr::kInfinity;

namespace {

std::vector<ExtendedPoint> random_diagram(std::mt19937& rng, int max_points) {
    std::uniform_int_distribution<int> nd(0, max_points);
    std::uniform_real_distribution<double> vd(0.0, 10.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<ExtendedPoint> pts;
    const int n = nd(rng);
    for (int i = 0; i < n; ++i) {
        const double b = vd(rng);
        if (coin(rng) < 0.2)
            pts.push_back({b, kInfinity});
        else
            pts.push_back({b, b + vd(rng) / 2 + 0.01});
    }
    return pts;
}

}  // namespace

TEST_CASE("extended half-plane metric") {
    CHECK(psr::dist_inf({1, 3}, {2, 5}) == 2.0);
    CHECK(psr::dist_inf({1, kInfinity}, {4, kInfinity}) == 3.0);
    CHECK(psr::dist_inf({-kInfinity, 3}, {-kInfinity, 5}) == 2.0);
    CHECK(psr::dist_inf({-kInfinity, kInfinity}, {-kInfinity, kInfinity}) == 0.0);
    // across components the distance is infinite
    CHECK(psr::dist_inf({1, 3}, {1, kInfinity}) == kInfinity);
    CHECK(psr::dist_inf({-kInfinity, 3}, {1, 3}) == kInfinity);
    CHECK(psr::diagonal_dist({1, 4}) == 1.5);
    CHECK(psr::diagonal_dist({1, kInfinity}) == kInfinity);
}

TEST_CASE("bottleneck distance on hand-checked pairs") {
    CHECK(psr::bottleneck({}, {}) == 0.0);
    // a single point far from the diagonal must be matched diagonally
    CHECK(psr::bottleneck({{0, 4}}, {}) == 2.0);
    CHECK(psr::bottleneck({{0, 4}}, {{0.5, 4.5}}) == 0.5);
    // cheaper to send both to the diagonal than to pair them
    CHECK(psr::bottleneck({{0, 1}}, {{10, 11}}) == 0.5);
    // essential points can only pair with essential points
    CHECK(psr::bottleneck({{0, kInfinity}}, {{3, kInfinity}}) == 3.0);
    CHECK(psr::bottleneck({{0, kInfinity}}, {}) == kInfinity);
    CHECK(psr::bottleneck({{0, kInfinity}, {0, 2}}, {{1, kInfinity}, {0, 2}}) == 1.0);
}

TEST_CASE("bottleneck agrees with exhaustive matching") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_diagram(rng, 6);
        const auto b = random_diagram(rng, 6);
        const double fast = psr::bottleneck(a, b);
        const double slow = oracles::bottleneck_exhaustive(a, b);
        if (fast == kInfinity)
            CHECK(slow == kInfinity);
        else
            CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    }
}

TEST_CASE("bottleneck is a pseudometric") {
    std::mt19937 rng(62);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_diagram(rng, 5);
        const auto b = random_diagram(rng, 5);
        const auto c = random_diagram(rng, 5);
        CHECK(psr::bottleneck(a, a) == 0.0);
        const double ab = psr::bottleneck(a, b);
        CHECK(ab == psr::bottleneck(b, a));
        const double bc = psr::bottleneck(b, c);
        const double ac = psr::bottleneck(a, c);
        if (ab < kInfinity && bc < kInfinity) CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("hausdorff distance") {
    CHECK(psr::hausdorff({0, 1}, {0, 1}) == 0.0);
    CHECK(psr::hausdorff({0}, {3}) == 3.0);
    CHECK(psr::hausdorff({0, 10}, {0}) == 10.0);
    CHECK(psr::hausdorff({0, 10}, {1, 9}) == 1.0);
    CHECK_THROWS_AS(psr::hausdorff({}, {1}), std::invalid_argument);
}

TEST_CASE("hausdorff grows monotonically under set separation") {
    std::mt19937 rng(63);
    std::uniform_real_distribution<double> vd(0.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a, b;
        for (int i = 0; i < 5; ++i) {
            a.push_back(vd(rng));
            b.push_back(vd(rng));
        }
        const double base = psr::hausdorff(a, b);
        std::vector<double> shifted = b;
        for (double& x : shifted) x += 20.0;
        CHECK(psr::hausdorff(a, shifted) > base);
    }
}

TEST_CASE("stability of facet diagrams under perturbation") {
    std::mt19937 rng(64);
    std::uniform_real_distribution<double> eps(0.0, 0.4);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = oracles::random_filtration(rng, 8);
        // monotone perturbation: scale by a factor and add noise growing
        // with the value, which keeps the order of nested faces
        std::vector<std::pair<Simplex, double>> perturbed;
        const double shift = eps(rng);
        const double stretch = 1.0 + eps(rng) / 10.0;
        for (const auto& [s, v] : f.ordered()) perturbed.emplace_back(s, v * stretch + shift);
        const auto g = Filtration::from_explicit(f.complex().vertex_count(), perturbed);
        const auto report = psr::stability_check(f, g);
        CHECK(report.pass);
        CHECK(report.bottleneck_distance <= report.sup_norm + 1e-9);
    }
}

TEST_CASE("constant shift attains the stability bound") {
    std::mt19937 rng(65);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = oracles::random_filtration(rng, 7);
        std::vector<std::pair<Simplex, double>> shifted;
        for (const auto& [s, v] : f.ordered()) shifted.emplace_back(s, v + 2.5);
        const auto g = Filtration::from_explicit(f.complex().vertex_count(), shifted);
        const auto report = psr::stability_check(f, g);
        CHECK(report.pass);
        CHECK(report.sup_norm == doctest::Approx(2.5));
        CHECK(report.bottleneck_distance == doctest::Approx(2.5));
    }
}
