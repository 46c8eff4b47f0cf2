#include "psr/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "psr/metrics.hpp"

namespace psr {

std::vector<double> extract_features(const PointCloud& cloud, const FeatureConfig& config) {
    const Filtration filtration =
        Filtration::vietoris_rips(cloud, config.max_dim, config.max_radius, config.elements, config.scale);
    const double lo = config.scale == Scale::Diameter ? 2.0 * config.min_radius : config.min_radius;
    const double hi = config.scale == Scale::Diameter ? 2.0 * config.max_radius : config.max_radius;
    std::vector<double> out;
    for (double v : filtration.critical_values(config.precision).values)
        if (v >= lo && v <= hi) out.push_back(v);
    return out;
}

DistanceMatrix pairwise_distances(const std::vector<Sample>& samples) {
    if (samples.size() < 2) throw std::invalid_argument("pairwise_distances requires at least 2 samples");
    DistanceMatrix m;
    for (const Sample& s : samples) {
        if (s.features.empty())
            throw std::invalid_argument("sample " + s.id + " has an empty feature set");
        m.ids.push_back(s.id);
    }
    const std::size_t n = samples.size();
    m.entries.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            m.entries[i][j] = m.entries[j][i] = hausdorff(samples[i].features, samples[j].features);
    return m;
}

std::vector<std::string> knn_predict(const DistanceMatrix& matrix,
                                     const std::vector<std::string>& labels,
                                     const std::vector<int>& training, const std::vector<int>& queries,
                                     int k) {
    if (k < 1 || k > static_cast<int>(training.size()))
        throw std::invalid_argument("k must be in [1, #training]");
    std::vector<std::string> out;
    out.reserve(queries.size());
    for (int q : queries) {
        std::vector<int> order = training;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (matrix.entries[q][a] != matrix.entries[q][b])
                return matrix.entries[q][a] < matrix.entries[q][b];
            return a < b;
        });
        std::map<std::string, std::pair<int, double>> votes;  // label -> (count, total distance)
        for (int i = 0; i < k; ++i) {
            auto& v = votes[labels[order[i]]];
            v.first += 1;
            v.second += matrix.entries[q][order[i]];
        }
        std::string best;
        std::pair<int, double> best_score{-1, 0};
        for (const auto& [label, score] : votes) {
            const bool better = score.first > best_score.first ||
                                (score.first == best_score.first && score.second < best_score.second);
            // map iteration is lexicographic, so equal (count, distance) keeps
            // the lexicographically smaller label
            if (better) {
                best = label;
                best_score = score;
            }
        }
        out.push_back(best);
    }
    return out;
}

EvalReport evaluate_predictions(const std::vector<std::string>& truth,
                                const std::vector<std::string>& predicted) {
    if (truth.size() != predicted.size() || truth.empty())
        throw std::invalid_argument("evaluate_predictions requires equal non-empty vectors");
    std::map<std::string, int> class_index;
    for (const auto& s : truth) class_index.emplace(s, 0);
    for (const auto& s : predicted) class_index.emplace(s, 0);
    int nc = 0;
    for (auto& [label, idx] : class_index) idx = nc++;

    std::vector<std::vector<long long>> cm(nc, std::vector<long long>(nc, 0));
    for (std::size_t i = 0; i < truth.size(); ++i)
        ++cm[class_index[truth[i]]][class_index[predicted[i]]];

    const double total = static_cast<double>(truth.size());
    EvalReport r;
    long long correct = 0;
    for (int c = 0; c < nc; ++c) correct += cm[c][c];
    r.accuracy = correct / total;

    int truth_classes = 0;
    double recall_sum = 0, precision_sum = 0, f1_sum = 0;
    for (int c = 0; c < nc; ++c) {
        long long tp = cm[c][c], fn = 0, fp = 0;
        for (int o = 0; o < nc; ++o) {
            if (o == c) continue;
            fn += cm[c][o];
            fp += cm[o][c];
        }
        const double recall = (tp + fn) ? static_cast<double>(tp) / (tp + fn) : 0.0;
        const double precision = (tp + fp) ? static_cast<double>(tp) / (tp + fp) : 0.0;
        const double f1 = (precision + recall > 0) ? 2 * precision * recall / (precision + recall) : 0.0;
        if (tp + fn > 0) {
            ++truth_classes;
            recall_sum += recall;
        }
        precision_sum += precision;
        f1_sum += f1;
    }
    r.balanced_accuracy = truth_classes ? recall_sum / truth_classes : 0.0;
    r.macro_precision = precision_sum / nc;
    r.macro_recall = truth_classes ? recall_sum / truth_classes : 0.0;
    r.macro_f1 = f1_sum / nc;

    // Multiclass Matthews correlation (the R_k statistic).
    double cov_tp = 0, cov_t = 0, cov_p = 0;
    std::vector<long long> row_sum(nc, 0), col_sum(nc, 0);
    for (int c = 0; c < nc; ++c)
        for (int o = 0; o < nc; ++o) {
            row_sum[c] += cm[c][o];
            col_sum[o] += cm[c][o];
        }
    cov_tp = correct * total;
    for (int c = 0; c < nc; ++c) cov_tp -= static_cast<double>(row_sum[c]) * col_sum[c];
    cov_t = total * total;
    cov_p = total * total;
    for (int c = 0; c < nc; ++c) {
        cov_t -= static_cast<double>(row_sum[c]) * row_sum[c];
        cov_p -= static_cast<double>(col_sum[c]) * col_sum[c];
    }
    if (cov_t <= 0 || cov_p <= 0) {
        r.matthews = 0.0;
        r.matthews_defined = false;
    } else {
        r.matthews = cov_tp / std::sqrt(cov_t * cov_p);
    }
    return r;
}

namespace {

EvalReport mean_of(const std::vector<EvalReport>& rs) {
    EvalReport m;
    for (const auto& r : rs) {
        m.accuracy += r.accuracy;
        m.balanced_accuracy += r.balanced_accuracy;
        m.macro_precision += r.macro_precision;
        m.macro_recall += r.macro_recall;
        m.macro_f1 += r.macro_f1;
        m.matthews += r.matthews;
        m.matthews_defined = m.matthews_defined && r.matthews_defined;
    }
    const double n = static_cast<double>(rs.size());
    m.accuracy /= n;
    m.balanced_accuracy /= n;
    m.macro_precision /= n;
    m.macro_recall /= n;
    m.macro_f1 /= n;
    m.matthews /= n;
    return m;
}

EvalReport stddev_of(const std::vector<EvalReport>& rs, const EvalReport& m) {
    EvalReport s;
    if (rs.size() < 2) return s;
    for (const auto& r : rs) {
        s.accuracy += (r.accuracy - m.accuracy) * (r.accuracy - m.accuracy);
        s.balanced_accuracy +=
            (r.balanced_accuracy - m.balanced_accuracy) * (r.balanced_accuracy - m.balanced_accuracy);
        s.macro_precision += (r.macro_precision - m.macro_precision) * (r.macro_precision - m.macro_precision);
        s.macro_recall += (r.macro_recall - m.macro_recall) * (r.macro_recall - m.macro_recall);
        s.macro_f1 += (r.macro_f1 - m.macro_f1) * (r.macro_f1 - m.macro_f1);
        s.matthews += (r.matthews - m.matthews) * (r.matthews - m.matthews);
    }
    const double n = static_cast<double>(rs.size() - 1);
    s.accuracy = std::sqrt(s.accuracy / n);
    s.balanced_accuracy = std::sqrt(s.balanced_accuracy / n);
    s.macro_precision = std::sqrt(s.macro_precision / n);
    s.macro_recall = std::sqrt(s.macro_recall / n);
    s.macro_f1 = std::sqrt(s.macro_f1 / n);
    s.matthews = std::sqrt(s.matthews / n);
    return s;
}

}  // namespace

EvalSummary evaluate(const DistanceMatrix& matrix, const std::vector<std::string>& labels, int k,
                     double test_fraction, int repetitions, std::uint64_t seed) {
    if (test_fraction <= 0.0 || test_fraction >= 1.0)
        throw std::invalid_argument("test_fraction must be in (0, 1)");
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    if (labels.size() != matrix.ids.size())
        throw std::invalid_argument("label count does not match distance matrix");

    std::map<std::string, std::vector<int>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(static_cast<int>(i));

    EvalSummary summary;
    constexpr int kRetryCap = 32;
    for (int rep = 0; rep < repetitions; ++rep) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(rep)};
        std::mt19937_64 rng(seq);
        std::vector<int> train, test;
        int attempt = 0;
        for (;; ++attempt) {
            if (attempt >= kRetryCap)
                throw std::runtime_error("could not produce a split with every class in training");
            train.clear();
            test.clear();
            for (auto& [label, members] : by_class) {
                std::vector<int> shuffled = members;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                // stratified: per-class proportional test share, rounded down
                // so at least one member stays in training when possible
                auto n_test = static_cast<std::size_t>(std::llround(shuffled.size() * test_fraction));
                if (n_test >= shuffled.size()) n_test = shuffled.size() - 1;
                test.insert(test.end(), shuffled.begin(), shuffled.begin() + n_test);
                train.insert(train.end(), shuffled.begin() + n_test, shuffled.end());
            }
            if (!train.empty() && !test.empty() && static_cast<int>(train.size()) >= k) break;
        }
        std::sort(train.begin(), train.end());
        std::sort(test.begin(), test.end());
        const auto predicted = knn_predict(matrix, labels, train, test, k);
        std::vector<std::string> truth;
        truth.reserve(test.size());
        for (int t : test) truth.push_back(labels[t]);
        summary.per_repetition.push_back(evaluate_predictions(truth, predicted));
    }
    summary.mean = mean_of(summary.per_repetition);
    summary.stddev = stddev_of(summary.per_repetition, summary.mean);
    return summary;
}

}  // namespace psr
