#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "psr/pipeline.hpp"

using psr::DistanceMatrix;
using psr::PointCloud;
using psr::Sample;

namespace {

PointCloud cluster_at(double offset, int count = 3) {
    PointCloud cloud;
    for (int i = 0; i < count; ++i)
        cloud.atoms.push_back({"C", {offset + 0.3 * i, 0.0, 0.0}});
    return cloud;
}

// three well-separated classes: feature sets near 0, near 10, near 20
std::vector<Sample> synthetic_samples(int per_class) {
    std::vector<Sample> samples;
    int id = 0;
    for (int cls = 0; cls < 3; ++cls)
        for (int i = 0; i < per_class; ++i) {
            Sample s;
            s.id = "s" + std::to_string(id++);
            s.label = std::string(1, static_cast<char>('a' + cls));
            s.features = {cls * 10.0 + 0.05 * i, cls * 10.0 + 1.0 + 0.05 * i};
            samples.push_back(std::move(s));
        }
    return samples;
}

}  // namespace

TEST_CASE("extract_features clips to the configured window") {
    psr::FeatureConfig config;
    config.max_radius = 5.0;
    const auto all = psr::extract_features(cluster_at(0.0), config);
    // distances 0.3 and 0.6 plus the vertex birth at 0
    CHECK(all == std::vector<double>{0.0, 0.3, 0.6});

    config.min_radius = 0.2;  // diameter cutoff 0.4
    CHECK(psr::extract_features(cluster_at(0.0), config) == std::vector<double>{0.6});
}

TEST_CASE("pairwise distances are symmetric with zero diagonal") {
    const auto samples = synthetic_samples(2);
    const auto m = psr::pairwise_distances(samples);
    REQUIRE(m.ids.size() == 6);
    for (std::size_t i = 0; i < m.ids.size(); ++i) {
        CHECK(m.entries[i][i] == 0.0);
        for (std::size_t j = 0; j < m.ids.size(); ++j) CHECK(m.entries[i][j] == m.entries[j][i]);
    }
    CHECK(m.entries[0][2] > 5.0);  // across clusters
    CHECK(m.entries[0][1] < 1.0);  // within a cluster
    CHECK_THROWS_AS(psr::pairwise_distances({samples[0]}), std::invalid_argument);
}

TEST_CASE("knn prediction with known confusion") {
    // 1-D distance layout where one query sits between classes
    DistanceMatrix m;
    m.ids = {"t0", "t1", "t2", "q"};
    const std::vector<double> pos = {0.0, 1.0, 10.0, 0.5};
    m.entries.assign(4, std::vector<double>(4, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.entries[i][j] = std::abs(pos[i] - pos[j]);
    const std::vector<std::string> labels = {"x", "x", "y", "?"};
    CHECK(psr::knn_predict(m, labels, {0, 1, 2}, {3}, 3) == std::vector<std::string>{"x"});
    CHECK(psr::knn_predict(m, labels, {0, 1, 2}, {3}, 1) == std::vector<std::string>{"x"});
    CHECK_THROWS_AS(psr::knn_predict(m, labels, {0, 1, 2}, {3}, 4), std::invalid_argument);
}

TEST_CASE("tie-breaking is deterministic: count, then distance, then label") {
    DistanceMatrix m;
    m.ids = {"a1", "b1", "q"};
    m.entries = {{0, 2, 1}, {2, 0, 1}, {1, 1, 0}};
    const std::vector<std::string> labels = {"beta", "alpha", "?"};
    // equal count and equal total distance: lexicographically smaller label
    CHECK(psr::knn_predict(m, labels, {0, 1}, {2}, 2) == std::vector<std::string>{"alpha"});
}

TEST_CASE("metrics on a hand-computed confusion matrix") {
    const std::vector<std::string> truth = {"a", "a", "a", "b", "b", "c"};
    const std::vector<std::string> pred = {"a", "a", "a", "b", "b", "a"};
    const auto r = psr::evaluate_predictions(truth, pred);
    CHECK(r.accuracy == doctest::Approx(5.0 / 6.0));
    // recalls: a = 1, b = 1, c = 0
    CHECK(r.balanced_accuracy == doctest::Approx(2.0 / 3.0));
    // precisions: a = 3/4, b = 1, c = 0
    CHECK(r.macro_precision == doctest::Approx((3.0 / 4.0 + 1.0) / 3.0));
    CHECK(r.macro_recall == doctest::Approx(2.0 / 3.0));
    CHECK(r.matthews == doctest::Approx(14.0 / std::sqrt(22.0 * 16.0)));
    CHECK(r.matthews_defined);
    CHECK(r.matthews > 0.4);
    CHECK(r.matthews < 1.0);

    const auto perfect = psr::evaluate_predictions(truth, truth);
    CHECK(perfect.accuracy == 1.0);
    CHECK(perfect.balanced_accuracy == 1.0);
    CHECK(perfect.macro_precision == 1.0);
    CHECK(perfect.macro_recall == 1.0);
    CHECK(perfect.macro_f1 == 1.0);
    CHECK(perfect.matthews == 1.0);
}

TEST_CASE("degenerate single-class runs flag matthews as undefined") {
    const auto r = psr::evaluate_predictions({"a", "a"}, {"a", "a"});
    CHECK_FALSE(r.matthews_defined);
    CHECK(r.matthews == 0.0);
}

TEST_CASE("evaluation is deterministic in the seed") {
    const auto samples = synthetic_samples(5);
    std::vector<std::string> labels;
    for (const auto& s : samples) labels.push_back(s.label);
    const auto m = psr::pairwise_distances(samples);
    const auto r1 = psr::evaluate(m, labels, 3, 0.4, 5, 99);
    const auto r2 = psr::evaluate(m, labels, 3, 0.4, 5, 99);
    REQUIRE(r1.per_repetition.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(r1.per_repetition[i].accuracy == r2.per_repetition[i].accuracy);
    const auto r3 = psr::evaluate(m, labels, 3, 0.4, 5, 100);
    // a different seed may give different splits, but stays valid
    CHECK(r3.per_repetition.size() == 5);
    CHECK(r1.mean.accuracy == 1.0);  // clusters are trivially separable
}

TEST_CASE("evaluation is invariant under sample permutation") {
    auto samples = synthetic_samples(4);
    std::vector<std::string> labels;
    for (const auto& s : samples) labels.push_back(s.label);
    const auto mean1 = psr::evaluate(psr::pairwise_distances(samples), labels, 3, 0.5, 8, 7).mean;

    std::mt19937 rng(8);
    std::vector<int> perm(samples.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Sample> shuffled;
    std::vector<std::string> shuffled_labels;
    for (int i : perm) {
        shuffled.push_back(samples[i]);
        shuffled_labels.push_back(labels[i]);
    }
    const auto mean2 =
        psr::evaluate(psr::pairwise_distances(shuffled), shuffled_labels, 3, 0.5, 8, 7).mean;
    // separable fixture: both orderings must score perfectly
    CHECK(mean1.accuracy == 1.0);
    CHECK(mean2.accuracy == 1.0);
    CHECK(mean1.macro_f1 == mean2.macro_f1);
}

TEST_CASE("evaluate validates its arguments") {
    const auto samples = synthetic_samples(2);
    std::vector<std::string> labels;
    for (const auto& s : samples) labels.push_back(s.label);
    const auto m = psr::pairwise_distances(samples);
    CHECK_THROWS_AS(psr::evaluate(m, labels, 3, 0.0, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(psr::evaluate(m, labels, 3, 1.0, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(psr::evaluate(m, labels, 3, 0.5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(psr::evaluate(m, {"a"}, 3, 0.5, 5, 1), std::invalid_argument);
}
