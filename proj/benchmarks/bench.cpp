#include <benchmark/benchmark.h>

#include <random>

#include "psr/facet.hpp"
#include "psr/filtration.hpp"
#include "psr/homology.hpp"
#include "psr/sr_algebra.hpp"

namespace {

psr::SimplicialComplex random_complex(int n, unsigned seed) {
    std::mt19937 rng(seed);
    psr::SimplicialComplex c(n);
    std::uniform_int_distribution<int> vd(0, n - 1);
    for (int i = 0; i < 4 * n; ++i) {
        std::vector<psr::Vertex> verts = {vd(rng), vd(rng), vd(rng)};
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        c.insert_face(psr::Simplex(std::move(verts)));
    }
    return c;
}

psr::PointCloud random_cloud(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(0.0, 6.0);
    psr::PointCloud cloud;
    for (int i = 0; i < n; ++i) cloud.atoms.push_back({"C", {d(rng), d(rng), d(rng)}});
    return cloud;
}

void BM_hochster_table(benchmark::State& state) {
    const auto c = random_complex(static_cast<int>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(psr::hochster_table(c));
}
BENCHMARK(BM_hochster_table)->Arg(8)->Arg(12)->Arg(16);

void BM_vietoris_rips(benchmark::State& state) {
    const auto cloud = random_cloud(static_cast<int>(state.range(0)), 18);
    for (auto _ : state)
        benchmark::DoNotOptimize(psr::Filtration::vietoris_rips(cloud, 2, 2.0));
}
BENCHMARK(BM_vietoris_rips)->Arg(20)->Arg(40);

void BM_persistence_barcode(benchmark::State& state) {
    const auto cloud = random_cloud(static_cast<int>(state.range(0)), 19);
    const auto f = psr::Filtration::vietoris_rips(cloud, 2, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(psr::persistence_barcode(f));
}
BENCHMARK(BM_persistence_barcode)->Arg(20)->Arg(40);

void BM_facet_barcode(benchmark::State& state) {
    const auto cloud = random_cloud(static_cast<int>(state.range(0)), 20);
    const auto f = psr::Filtration::vietoris_rips(cloud, 2, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(psr::facet_barcode(f));
}
BENCHMARK(BM_facet_barcode)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
