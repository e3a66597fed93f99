#ifndef HDNN_CLASSIFIERS_HPP
#define HDNN_CLASSIFIERS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "hdnn/dataset.hpp"
#include "hdnn/errors.hpp"
#include "hdnn/metrics.hpp"

namespace hdnn {

struct NeighborRecord {
    double distance;
    int label;
    int train_index;
};

/// All training examples sorted by ascending distance to one query.
/// Rank is the 1-based position; equal distances keep training order.
using RankedNeighbors = std::vector<NeighborRecord>;

struct Prediction {
    int label = -1;
    std::vector<double> scores; // votes, inverted-rank sums, or weighted sums
};

struct ClassifierSpec {
    enum class Kind { Knn, SqrtKnn, Iinc, Enn };
    Kind kind = Kind::Knn;
    int k = 1; // meaningful for Kind::Knn only

    static ClassifierSpec knn(int k) { return {Kind::Knn, k}; }
    static ClassifierSpec sqrt_knn() { return {Kind::SqrtKnn, 0}; }
    static ClassifierSpec iinc() { return {Kind::Iinc, 0}; }
    static ClassifierSpec enn() { return {Kind::Enn, 0}; }

    std::string name() const {
        switch (kind) {
            case Kind::Knn: return std::to_string(k) + "NN";
            case Kind::SqrtKnn: return "sqrtnNN";
            case Kind::Iinc: return "IINC";
            case Kind::Enn: return "ENN";
        }
        return "?";
    }

    static ClassifierSpec parse(std::string_view s) {
        if (s == "sqrtnNN" || s == "sqrtn") return sqrt_knn();
        if (s == "IINC" || s == "iinc") return iinc();
        if (s == "ENN" || s == "enn") return enn();
        if (s.size() > 2 && s.substr(s.size() - 2) == "NN") {
            const std::string digits(s.substr(0, s.size() - 2));
            try {
                const int k = std::stoi(digits);
                if (k >= 1 && std::to_string(k) == digits) return knn(k);
            } catch (...) {
            }
        }
        throw InvalidInput("unknown classifier '" + std::string(s) +
                           "' (expected <k>NN, sqrtnNN, IINC or ENN)");
    }
};

/// The paper's table columns: 1NN..9NN, sqrt(n)NN, IINC, ENN.
inline std::vector<ClassifierSpec> default_specs() {
    return {ClassifierSpec::knn(1), ClassifierSpec::knn(3), ClassifierSpec::knn(5),
            ClassifierSpec::knn(7), ClassifierSpec::knn(9), ClassifierSpec::sqrt_knn(),
            ClassifierSpec::iinc(), ClassifierSpec::enn()};
}

inline RankedNeighbors rank_neighbors(const Dataset& train,
                                      const FeatureVector& query, Metric metric) {
    if (train.size() == 0)
        throw InvalidInput("rank_neighbors: empty training set");
    if (query.size() != train.feature_count)
        throw DimensionError("rank_neighbors: query dimension " +
                             std::to_string(query.size()) + " vs training " +
                             std::to_string(train.feature_count));
    RankedNeighbors ranked;
    ranked.reserve(train.size());
    for (std::size_t i = 0; i < train.size(); ++i)
        ranked.push_back({distance(metric, train.features[i], query),
                          train.labels[i], static_cast<int>(i)});
    std::sort(ranked.begin(), ranked.end(),
              [](const NeighborRecord& a, const NeighborRecord& b) {
                  if (a.distance != b.distance) return a.distance < b.distance;
                  return a.train_index < b.train_index;
              });
    return ranked;
}

namespace detail {

inline int num_classes(const RankedNeighbors& ranked) {
    int hi = 0;
    for (const auto& r : ranked) hi = std::max(hi, r.label + 1);
    return hi;
}

/// Argmax over scores; ties go to the class whose best neighbor rank is
/// smallest. best_rank uses 1-based ranks, 0 meaning "not seen".
inline int argmax_with_rank_ties(const std::vector<double>& scores,
                                 const std::vector<std::size_t>& best_rank) {
    int winner = 0;
    for (int c = 1; c < static_cast<int>(scores.size()); ++c) {
        if (scores[c] > scores[winner]) {
            winner = c;
        } else if (scores[c] == scores[winner]) {
            const std::size_t rc = best_rank[c] == 0
                                       ? std::numeric_limits<std::size_t>::max()
                                       : best_rank[c];
            const std::size_t rw = best_rank[winner] == 0
                                       ? std::numeric_limits<std::size_t>::max()
                                       : best_rank[winner];
            if (rc < rw) winner = c;
        }
    }
    return winner;
}

} // namespace detail

/// Majority vote over the first k ranks; vote ties go to the tied class
/// with the nearest representative.
inline Prediction knn_predict(const RankedNeighbors& ranked, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > ranked.size())
        throw InvalidInput("knn_predict: k=" + std::to_string(k) +
                           " out of range [1, " + std::to_string(ranked.size()) + "]");
    const int classes = detail::num_classes(ranked);
    Prediction p;
    p.scores.assign(classes, 0.0);
    std::vector<std::size_t> best_rank(classes, 0);
    for (int i = 0; i < k; ++i) {
        const int c = ranked[static_cast<std::size_t>(i)].label;
        p.scores[c] += 1.0;
        if (best_rank[c] == 0) best_rank[c] = static_cast<std::size_t>(i) + 1;
    }
    p.label = detail::argmax_with_rank_ties(p.scores, best_rank);
    return p;
}

/// floor(sqrt(n)), never below 1.
inline int sqrt_k(std::size_t n_train) {
    if (n_train < 1) throw InvalidInput("sqrt_k: empty training set");
    auto k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n_train)));
    while ((k + 1) * (k + 1) <= n_train) ++k;
    while (k > 1 && k * k > n_train) --k;
    return static_cast<int>(std::max<std::size_t>(k, 1));
}

/// Odd sub-classifier sizes 1, 3, ..., up to floor(sqrt(n)).
inline std::vector<int> enn_k_values(std::size_t n_train) {
    const int top = sqrt_k(n_train);
    std::vector<int> ks;
    for (int k = 1; k <= top; k += 2) ks.push_back(k);
    return ks;
}

/// Sum over the whole ranking of the N-th harmonic series.
inline double harmonic_number(std::size_t n) {
    double h = 0.0;
    for (std::size_t i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
    return h;
}

/// Inverted-rank scoring over the full ranking: class score is the sum of
/// 1/rank over that class's examples. Probabilities are scores / H_N.
inline Prediction iinc_predict(const RankedNeighbors& ranked) {
    if (ranked.empty()) throw InvalidInput("iinc_predict: empty ranking");
    const int classes = detail::num_classes(ranked);
    Prediction p;
    p.scores.assign(classes, 0.0);
    std::vector<std::size_t> best_rank(classes, 0);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const int c = ranked[i].label;
        p.scores[c] += 1.0 / static_cast<double>(i + 1);
        if (best_rank[c] == 0) best_rank[c] = i + 1;
    }
    p.label = detail::argmax_with_rank_ties(p.scores, best_rank);
    return p;
}

inline std::vector<double> iinc_probabilities(const Prediction& p, std::size_t n) {
    const double h = harmonic_number(n);
    std::vector<double> probs(p.scores.size());
    for (std::size_t c = 0; c < probs.size(); ++c) probs[c] = p.scores[c] / h;
    return probs;
}

/// Weighted ensemble of odd-k sub-classifiers: inside the sub-classifier of
/// size k, neighbor at rank i contributes 1/log2(1+i) to its class. A rank-i
/// neighbor therefore counts once per odd k >= i, so the weighted sum folds
/// to multiplicity(i) * w(i).
inline Prediction enn_predict(const RankedNeighbors& ranked) {
    if (ranked.empty()) throw InvalidInput("enn_predict: empty ranking");
    const std::vector<int> ks = enn_k_values(ranked.size());
    const int top = ks.back();
    const int classes = detail::num_classes(ranked);
    Prediction p;
    p.scores.assign(classes, 0.0);
    std::vector<std::size_t> best_rank(classes, 0);
    for (int i = 1; i <= top; ++i) {
        const int first_odd_k = (i % 2 == 1) ? i : i + 1;
        const auto multiplicity = static_cast<double>((top - first_odd_k) / 2 + 1);
        const double w = 1.0 / std::log2(1.0 + static_cast<double>(i));
        const int c = ranked[static_cast<std::size_t>(i - 1)].label;
        p.scores[c] += multiplicity * w;
        if (best_rank[c] == 0) best_rank[c] = static_cast<std::size_t>(i);
    }
    p.label = detail::argmax_with_rank_ties(p.scores, best_rank);
    return p;
}

inline Prediction predict_ranked(const RankedNeighbors& ranked,
                                 const ClassifierSpec& spec) {
    switch (spec.kind) {
        case ClassifierSpec::Kind::Knn: return knn_predict(ranked, spec.k);
        case ClassifierSpec::Kind::SqrtKnn:
            return knn_predict(ranked, sqrt_k(ranked.size()));
        case ClassifierSpec::Kind::Iinc: return iinc_predict(ranked);
        case ClassifierSpec::Kind::Enn: return enn_predict(ranked);
    }
    throw InvalidInput("predict_ranked: bad classifier kind");
}

/// Ranks once, then dispatches on the classifier kind.
inline Prediction predict(const Dataset& train, const FeatureVector& query,
                          Metric metric, const ClassifierSpec& spec) {
    return predict_ranked(rank_neighbors(train, query, metric), spec);
}

} // namespace hdnn

#endif
