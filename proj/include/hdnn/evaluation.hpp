#ifndef HDNN_EVALUATION_HPP
#define HDNN_EVALUATION_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "hdnn/classifiers.hpp"
#include "hdnn/dataset.hpp"
#include "hdnn/errors.hpp"
#include "hdnn/metrics.hpp"
#include "hdnn/tables.hpp"

namespace hdnn {

struct ExperimentConfig {
    std::vector<std::string> datasets;
    Metric metric = Metric::Hassanat;
    std::vector<ClassifierSpec> specs = default_specs();
    int runs = 10;
    double test_fraction = 0.3;
    std::uint64_t base_seed = 42;
    Normalization normalization = Normalization::None;
    int threads = 1;
};

inline double accuracy(const std::vector<int>& predicted,
                       const std::vector<int>& truth) {
    if (predicted.size() != truth.size() || predicted.empty())
        throw InvalidInput("accuracy: label lists must have equal non-zero length");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (predicted[i] == truth[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(truth.size());
}

namespace detail {

/// Classifies every test point under every spec, ranking once per point.
/// Work is chunked across threads; each point writes its own slot, so the
/// result is independent of scheduling.
inline std::vector<std::vector<int>> classify_all(
    const Dataset& train, const Dataset& test,
    const std::vector<ClassifierSpec>& specs, Metric metric, int threads) {
    const std::size_t n = test.size();
    std::vector<std::vector<int>> predicted(specs.size(), std::vector<int>(n, -1));

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t q = begin; q < end; ++q) {
            const RankedNeighbors ranked =
                rank_neighbors(train, test.features[q], metric);
            for (std::size_t s = 0; s < specs.size(); ++s)
                predicted[s][q] = predict_ranked(ranked, specs[s]).label;
        }
    };

    const auto nthreads =
        std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(threads), n));
    if (nthreads == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + nthreads - 1) / nthreads;
        for (std::size_t t = 0; t < nthreads; ++t) {
            const std::size_t begin = t * chunk;
            if (begin >= n) break;
            pool.emplace_back(work, begin, std::min(begin + chunk, n));
        }
        for (auto& th : pool) th.join();
    }
    return predicted;
}

} // namespace detail

/// Repeated seeded splits: run r uses seed base_seed + r. Each cell is the
/// mean accuracy over runs; an "Average" row (column means over datasets)
/// closes the table.
inline Table run_experiment(const ExperimentConfig& config,
                            const std::map<std::string, Dataset>& datasets) {
    if (config.runs < 1) throw InvalidInput("runs must be >= 1");
    Table table;
    for (const auto& spec : config.specs) table.col_names.push_back(spec.name());

    for (const auto& name : config.datasets) {
        const auto it = datasets.find(name);
        if (it == datasets.end())
            throw InvalidInput("dataset '" + name + "' not loaded");
        const Dataset& source = it->second;

        std::vector<double> sums(config.specs.size(), 0.0);
        for (int run = 0; run < config.runs; ++run) {
            Split split = train_test_split(source, config.test_fraction,
                                           config.base_seed + static_cast<std::uint64_t>(run));
            if (split.test.size() == 0)
                throw InvalidInput("dataset '" + name + "': empty test split");
            if (config.normalization != Normalization::None) {
                auto [tr, te] = normalize_minmax(
                    split.train, split.test,
                    config.normalization == Normalization::All);
                split.train = std::move(tr);
                split.test = std::move(te);
            }
            const auto predicted = detail::classify_all(
                split.train, split.test, config.specs, config.metric, config.threads);
            for (std::size_t s = 0; s < config.specs.size(); ++s)
                sums[s] += accuracy(predicted[s], split.test.labels);
        }
        table.row_names.push_back(name);
        std::vector<double> row(config.specs.size());
        for (std::size_t s = 0; s < config.specs.size(); ++s)
            row[s] = sums[s] / config.runs;
        table.cells.push_back(std::move(row));
    }

    std::vector<double> avg(table.cols(), 0.0);
    for (const auto& row : table.cells)
        for (std::size_t c = 0; c < row.size(); ++c) avg[c] += row[c];
    for (auto& v : avg) v /= static_cast<double>(table.rows());
    table.row_names.push_back("Average");
    table.cells.push_back(std::move(avg));
    return table;
}

/// Elementwise treatment minus baseline; shapes must match exactly.
inline Table delta_table(const Table& baseline, const Table& treatment) {
    if (baseline.row_names != treatment.row_names ||
        baseline.col_names != treatment.col_names)
        throw InvalidInput("delta_table: tables have different shapes");
    Table out = baseline;
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c)
            out.at(r, c) = treatment.at(r, c) - baseline.at(r, c);
    return out;
}

/// Per-dataset deviation from the row's best cell, with a leading "Best"
/// column and trailing "Sum" / "Maximum" rows per classifier. round_first
/// rounds every accuracy to two decimals before any arithmetic, mirroring
/// analysis done on a printed two-decimal table. Rows named "Average" are
/// aggregate rows in accuracy tables and are skipped.
inline Table stability_table(const Table& acc, bool round_first = false) {
    if (acc.rows() == 0 || acc.cols() == 0)
        throw InvalidInput("stability_table: empty table");
    auto maybe_round = [&](double v) {
        return round_first ? std::round(v * 100.0) / 100.0 : v;
    };

    Table out;
    out.col_names.push_back("Best");
    out.col_names.insert(out.col_names.end(), acc.col_names.begin(),
                         acc.col_names.end());

    std::vector<double> sum(acc.cols(), 0.0);
    std::vector<double> maximum(acc.cols(), 0.0);
    for (std::size_t r = 0; r < acc.rows(); ++r) {
        if (acc.row_names[r] == "Average") continue;
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < acc.cols(); ++c)
            best = std::max(best, maybe_round(acc.at(r, c)));
        std::vector<double> row{best};
        for (std::size_t c = 0; c < acc.cols(); ++c) {
            const double dev = best - maybe_round(acc.at(r, c));
            row.push_back(dev);
            sum[c] += dev;
            maximum[c] = std::max(maximum[c], dev);
        }
        out.row_names.push_back(acc.row_names[r]);
        out.cells.push_back(std::move(row));
    }
    if (out.rows() == 0)
        throw InvalidInput("stability_table: no dataset rows");

    const double blank = std::nan("");
    std::vector<double> sum_row{blank}, max_row{blank};
    sum_row.insert(sum_row.end(), sum.begin(), sum.end());
    max_row.insert(max_row.end(), maximum.begin(), maximum.end());
    out.row_names.push_back("Sum");
    out.cells.push_back(std::move(sum_row));
    out.row_names.push_back("Maximum");
    out.cells.push_back(std::move(max_row));
    return out;
}

} // namespace hdnn

#endif
