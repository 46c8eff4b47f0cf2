#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "psr/sr_algebra.hpp"

using psr::BettiTable;
using psr::Filtration;
using psr::PrimeField;
using psr::Simplex;
using psr::SimplicialComplex;

namespace {

SimplicialComplex pyramid() {
    SimplicialComplex c(6);
    const int tris[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& t : tris) c.insert_face(Simplex{t[0], t[1], t[2]});
    const int edges[4][2] = {{0, 4}, {1, 4}, {1, 5}, {2, 5}};
    for (const auto& e : edges) c.insert_face(Simplex{e[0], e[1]});
    return c;
}

SimplicialComplex bipyramid() {
    SimplicialComplex c(5);
    const int tris[6][3] = {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {1, 2, 3}, {1, 2, 4}};
    for (const auto& t : tris) c.insert_face(Simplex{t[0], t[1], t[2]});
    return c;
}

Filtration bipyramid_by_dimension() {
    std::vector<std::pair<Simplex, double>> values;
    for (const Simplex& s : bipyramid().all_faces())
        values.emplace_back(s, static_cast<double>(s.dim()));
    return Filtration::from_explicit(5, values);
}

}  // namespace

TEST_CASE("graded betti table of the pyramid complex") {
    const auto table = psr::hochster_table(pyramid());
    const std::map<std::pair<int, int>, long long> expected = {
        {{0, 0}, 1}, {{1, 2}, 5}, {{1, 3}, 2}, {{1, 4}, 1}, {{2, 3}, 6}, {{2, 4}, 6},
        {{2, 5}, 2}, {{3, 4}, 2}, {{3, 5}, 6}, {{3, 6}, 1}, {{4, 6}, 2}};
    CHECK(table.entries == expected);
    CHECK(table.n == 6);
    CHECK_FALSE(table.truncated);
    // threaded enumeration gives the same table
    CHECK(psr::hochster_table(pyramid(), PrimeField{2}, -1, 4).entries == expected);
}

TEST_CASE("graded betti tables of the bipyramid endpoints") {
    SimplicialComplex points(5);
    CHECK(psr::hochster_table(points).entries ==
          std::map<std::pair<int, int>, long long>{
              {{0, 0}, 1}, {{1, 2}, 10}, {{2, 3}, 20}, {{3, 4}, 15}, {{4, 5}, 4}});
    CHECK(psr::hochster_table(bipyramid()).entries ==
          std::map<std::pair<int, int>, long long>{
              {{0, 0}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 5}, 1}});
}

TEST_CASE("degree cap marks the table truncated") {
    const auto table = psr::hochster_table(pyramid(), PrimeField{2}, 3);
    CHECK(table.truncated);
    CHECK(table.max_j == 3);
    CHECK(table.at(1, 2) == 5);
    CHECK(table.at(2, 4) == 0);
}

TEST_CASE("hochster corner identities on random complexes") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = oracles::random_complex(rng, 8);
        if (!c.is_full_vertex()) continue;  // the face ring construction assumes all vertices
        const int n = c.vertex_count();
        const auto table = psr::hochster_table(c);
        const auto betti = psr::reduced_betti(c);

        CHECK(table.at(0, 0) == 1);
        for (int i = 1; i <= n; ++i) CHECK(table.at(i, i) == 0);
        for (const auto& [ij, v] : table.entries)
            if (ij.second < ij.first) CHECK(v == 0);
        // beta_{i,n} = dim H~_{n-i-1}(Delta)
        for (int i = 0; i <= n; ++i) {
            const int deg = n - i - 1;
            const long long expected =
                (deg + 1 >= 0 && deg + 1 < static_cast<int>(betti.size())) ? betti[deg + 1] : 0;
            CHECK(table.at(i, n) == expected);
        }
    }
}

TEST_CASE("alternating sums and hilbert numerator") {
    const auto table = psr::hochster_table(pyramid());
    CHECK(psr::alternating_sums(table) == std::vector<long long>{1, 0, -5, 4, 3, -4, 1});
    CHECK(psr::hilbert_numerator(table) == std::vector<long long>{1, 0, -5, 4, 3, -4, 1});
    const auto five_points = psr::hochster_table(SimplicialComplex(5));
    CHECK(psr::alternating_sums(five_points) == std::vector<long long>{1, 0, -10, 20, -15, 4});
}

TEST_CASE("hilbert function from the numerator matches monomial counting") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = oracles::random_complex(rng, 7);
        const int n = c.vertex_count();
        const auto q = psr::hilbert_numerator(psr::hochster_table(c));
        for (int m = 0; m <= 6; ++m) {
            long long hf = 0;
            for (int j = 0; j < static_cast<int>(q.size()); ++j)
                hf += q[j] * psr::series_binomial(n, m - j);
            CHECK(hf == oracles::hilbert_function_by_counting(c, m));
        }
    }
}

TEST_CASE("h and f vectors of the fixtures") {
    const auto table = psr::hochster_table(pyramid());
    const auto f = psr::f_from_betti(table, 6, 3);
    CHECK(f.coefficients == std::vector<long long>{1, 6, 10, 4});
    const auto h = psr::h_vector_from_betti(table, 6, 3);
    CHECK(psr::f_from_h(h, 3).coefficients == f.coefficients);
    CHECK(psr::h_from_f(f, 3).coefficients == h.coefficients);

    const auto bt = psr::hochster_table(bipyramid());
    CHECK(psr::f_from_betti(bt, 5, 3).coefficients == std::vector<long long>{1, 5, 9, 6});
}

TEST_CASE("h/f round trips on random complexes") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = oracles::random_complex(rng, 8);
        if (c.is_empty()) continue;
        const int n = c.vertex_count();
        const int d = c.dim() + 1;
        const auto table = psr::hochster_table(c);

        const auto f_direct = psr::f_from_betti(table, n, d);
        CHECK(f_direct.coefficients == c.f_vector());

        const auto h = psr::h_vector_from_betti(table, n, d);
        CHECK(psr::f_from_h(h, d).coefficients == f_direct.coefficients);
        CHECK(psr::h_from_f(f_direct, d).coefficients == h.coefficients);
    }
}

TEST_CASE("persistent graded betti table of the dimension filtration") {
    const auto filtration = bipyramid_by_dimension();

    const auto r12 = psr::persistent_hochster_table(filtration, 1, 2);
    CHECK(r12.table.at(1, 3) == 1);

    const auto r02 = psr::persistent_hochster_table(filtration, 0, 2);
    CHECK(r02.table.at(4, 5) == 0);
    CHECK(r02.table.at(0, 0) == 1);
    CHECK(r02.table.at(1, 2) == 1);

    // at t = t' the persistent table is the static table of the sublevel
    for (double t : filtration.critical_values().values) {
        const auto at = psr::persistent_hochster_table(filtration, t, t);
        const auto direct = psr::hochster_table(filtration.sublevel(t));
        CHECK(at.table.entries == direct.entries);
    }
}

TEST_CASE("persistent h and f vectors of the dimension filtration") {
    const auto filtration = bipyramid_by_dimension();
    const auto h = psr::persistent_h_vector(filtration, 0, 2);
    CHECK(h.coefficients == std::vector<long long>{1, 2, 2, 2});
    const auto f = psr::persistent_f_vector(filtration, 0, 2);
    CHECK(f.coefficients == std::vector<long long>{1, 5, 9, 7});
    // at t = t' they reduce to the static vectors of the sublevel
    const auto f22 = psr::persistent_f_vector(filtration, 2, 2);
    CHECK(f22.coefficients == filtration.sublevel(2).f_vector());
}

TEST_CASE("binomial helpers") {
    CHECK(psr::binomial(5, 2) == 10);
    CHECK(psr::binomial(4, 0) == 1);
    CHECK(psr::binomial(3, 5) == 0);
    // (1-s)^0 = 1
    CHECK(psr::series_binomial(0, 0) == 1);
    CHECK(psr::series_binomial(0, 3) == 0);
    CHECK(psr::series_binomial(2, 3) == 4);  // coeff of s^3 in (1-s)^{-2}
}
