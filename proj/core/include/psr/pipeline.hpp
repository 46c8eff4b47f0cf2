#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psr/filtration.hpp"

namespace psr {

struct Sample {
    std::string id;
    std::string label;
    std::vector<double> features;  // critical values
};

struct DistanceMatrix {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> entries;  // symmetric, zero diagonal
};

struct FeatureConfig {
    double min_radius = 0.0;
    double max_radius = 7.0;
    int max_dim = 2;
    std::optional<std::set<std::string>> elements;
    Scale scale = Scale::Diameter;
    int precision = 9;
};

/// Critical values of the Vietoris-Rips filtration of the cloud, clipped to
/// the configured radius range (in the configured scale).
std::vector<double> extract_features(const PointCloud& cloud, const FeatureConfig& config);

/// Pairwise Hausdorff distances between sample feature sets.
DistanceMatrix pairwise_distances(const std::vector<Sample>& samples);

/// Majority vote among the k nearest training samples; ties broken by
/// smaller total distance, then lexicographic label. Only query-to-training
/// entries of the matrix are read.
std::vector<std::string> knn_predict(const DistanceMatrix& matrix,
                                     const std::vector<std::string>& labels,
                                     const std::vector<int>& training, const std::vector<int>& queries,
                                     int k);

struct EvalReport {
    double accuracy = 0;
    double balanced_accuracy = 0;
    double macro_precision = 0;
    double macro_recall = 0;
    double macro_f1 = 0;
    double matthews = 0;
    bool matthews_defined = true;  // false for degenerate (e.g. single-class) runs
};

struct EvalSummary {
    std::vector<EvalReport> per_repetition;
    EvalReport mean;
    EvalReport stddev;
};

/// Multiclass metrics from predictions vs. ground truth.
EvalReport evaluate_predictions(const std::vector<std::string>& truth,
                                const std::vector<std::string>& predicted);

/// Repeated stratified splits; per-repetition sub-seeds derive
/// deterministically from `seed`.
EvalSummary evaluate(const DistanceMatrix& matrix, const std::vector<std::string>& labels, int k,
                     double test_fraction, int repetitions, std::uint64_t seed);

}  // namespace psr
