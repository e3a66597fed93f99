#ifndef HDNN_DATASET_HPP
#define HDNN_DATASET_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hdnn/errors.hpp"
#include "hdnn/metrics.hpp"

namespace hdnn {

/// A labelled collection of feature vectors. Labels are dense ids
/// 0..class_count-1 in order of first appearance; label_names maps
/// an id back to the original token.
struct Dataset {
    std::string name;
    std::vector<FeatureVector> features;
    std::vector<int> labels;
    std::vector<std::string> label_names;
    std::size_t feature_count = 0;

    std::size_t size() const { return features.size(); }
    int class_count() const { return static_cast<int>(label_names.size()); }
};

struct ManifestEntry {
    std::string name;
    std::string file;
    std::size_t expected_examples = 0;
    std::size_t expected_features = 0;
    int expected_classes = 0;
    double expected_min = 0.0;
    double expected_max = 0.0;
    std::size_t label_column = 0;
    bool has_header = false;
};

struct ValidationCheck {
    std::string what;
    bool passed;
    std::string expected;
    std::string actual;
};

struct ValidationReport {
    std::string dataset;
    std::vector<ValidationCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const ValidationCheck& c) { return c.passed; });
    }

    std::string summary() const {
        std::string s;
        for (const auto& c : checks) {
            if (c.passed) continue;
            if (!s.empty()) s += "; ";
            s += c.what + " " + c.actual + " ≠ " + c.expected;
        }
        return s;
    }
};

enum class Normalization { None, Train, All };

inline Normalization parse_normalization(std::string_view s) {
    if (s == "none") return Normalization::None;
    if (s == "train") return Normalization::Train;
    if (s == "all") return Normalization::All;
    throw InvalidInput("unknown normalization '" + std::string(s) +
                       "' (expected none|train|all)");
}

struct Split {
    Dataset train;
    Dataset test;
    std::uint64_t seed = 0;
    double test_fraction = 0.0;
};

namespace detail {

inline double parse_cell(std::string_view cell, std::size_t row, std::size_t col) {
    // Trim surrounding whitespace; from_chars wants the bare number.
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t'))
        cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' ||
                             cell.back() == '\r'))
        cell.remove_suffix(1);
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw ParseError("unparseable numeric cell '" + std::string(cell) +
                         "' at row " + std::to_string(row + 1) + ", column " +
                         std::to_string(col + 1));
    return value;
}

inline std::vector<std::string_view> split_line(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline std::string trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return std::string(s);
}

} // namespace detail

/// Parses a comma-separated file with one label column (by index) and all
/// remaining columns as real-valued features. No quoting support; '.' is the
/// decimal point; an optional single header line may be skipped.
inline Dataset load_csv(const std::string& path, std::size_t label_column,
                        bool has_header, std::string name = "") {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "'");

    Dataset ds;
    ds.name = name.empty() ? path : std::move(name);

    std::unordered_map<std::string, int> label_ids;
    std::string line;
    std::size_t row = 0;
    bool skipped_header = !has_header;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!skipped_header) {
            skipped_header = true;
            continue;
        }
        const auto cells = detail::split_line(line, ',');
        if (ds.features.empty()) {
            if (cells.size() < 2)
                throw FormatError("'" + path + "': rows need at least one feature and a label");
            if (label_column >= cells.size())
                throw FormatError("'" + path + "': label column " +
                                  std::to_string(label_column) + " out of range (row has " +
                                  std::to_string(cells.size()) + " columns)");
            ds.feature_count = cells.size() - 1;
        } else if (cells.size() != ds.feature_count + 1) {
            throw FormatError("'" + path + "': ragged row " + std::to_string(row + 1) +
                              " has " + std::to_string(cells.size()) + " columns, expected " +
                              std::to_string(ds.feature_count + 1));
        }

        FeatureVector fv;
        fv.reserve(ds.feature_count);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c == label_column) continue;
            fv.push_back(detail::parse_cell(cells[c], row, c));
        }
        const std::string token = detail::trim(cells[label_column]);
        auto [it, inserted] = label_ids.try_emplace(token, static_cast<int>(ds.label_names.size()));
        if (inserted) ds.label_names.push_back(token);
        ds.labels.push_back(it->second);
        ds.features.push_back(std::move(fv));
        ++row;
    }
    if (ds.features.empty())
        throw FormatError("'" + path + "': no data rows");
    return ds;
}

/// Line-oriented manifest: blocks of "key: value" lines separated by blank
/// lines, '#' starts a comment line. Relative file paths are left untouched.
inline std::vector<ManifestEntry> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open manifest '" + path + "'");

    std::vector<ManifestEntry> entries;
    ManifestEntry cur;
    bool in_block = false;

    auto flush = [&] {
        if (!in_block) return;
        if (cur.name.empty() || cur.file.empty())
            throw FormatError("manifest '" + path + "': block missing name/file");
        if (cur.expected_examples == 0 || cur.expected_features == 0 ||
            cur.expected_classes <= 0)
            throw FormatError("manifest '" + path + "': entry '" + cur.name +
                              "' needs positive examples/features/classes");
        if (cur.expected_min > cur.expected_max)
            throw FormatError("manifest '" + path + "': entry '" + cur.name +
                              "' has min > max");
        entries.push_back(std::move(cur));
        cur = ManifestEntry{};
        in_block = false;
    };

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string trimmed = detail::trim(line);
        if (trimmed.empty()) {
            flush();
            continue;
        }
        if (trimmed.front() == '#') continue;
        const std::size_t colon = trimmed.find(':');
        if (colon == std::string::npos)
            throw FormatError("manifest '" + path + "': bad line '" + trimmed + "'");
        const std::string key = detail::trim(std::string_view(trimmed).substr(0, colon));
        const std::string value = detail::trim(std::string_view(trimmed).substr(colon + 1));
        in_block = true;
        if (key == "name") cur.name = value;
        else if (key == "file") cur.file = value;
        else if (key == "examples") cur.expected_examples = std::stoul(value);
        else if (key == "features") cur.expected_features = std::stoul(value);
        else if (key == "classes") cur.expected_classes = std::stoi(value);
        else if (key == "min") cur.expected_min = std::stod(value);
        else if (key == "max") cur.expected_max = std::stod(value);
        else if (key == "label_column") cur.label_column = std::stoul(value);
        else if (key == "has_header") cur.has_header = (value == "true" || value == "1");
        else throw FormatError("manifest '" + path + "': unknown key '" + key + "'");
    }
    flush();
    if (entries.empty())
        throw FormatError("manifest '" + path + "': no entries");
    return entries;
}

/// Checks counts and the global feature min/max against the manifest.
/// Min/max use absolute tolerance 0.01 to match two-decimal bookkeeping.
inline ValidationReport validate(const Dataset& ds, const ManifestEntry& entry) {
    ValidationReport report;
    report.dataset = entry.name;

    auto num = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };
    auto check_count = [&](const std::string& what, std::size_t actual,
                           std::size_t expected) {
        report.checks.push_back({what, actual == expected,
                                 std::to_string(expected), std::to_string(actual)});
    };
    check_count("examples", ds.size(), entry.expected_examples);
    check_count("features", ds.feature_count, entry.expected_features);
    check_count("classes", static_cast<std::size_t>(ds.class_count()),
                static_cast<std::size_t>(entry.expected_classes));

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& fv : ds.features)
        for (double v : fv) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    report.checks.push_back({"min", std::fabs(lo - entry.expected_min) <= 0.01,
                             num(entry.expected_min), num(lo)});
    report.checks.push_back({"max", std::fabs(hi - entry.expected_max) <= 0.01,
                             num(entry.expected_max), num(hi)});
    return report;
}

/// Per-feature min-max rescaling to [0,1]. Statistics come from the training
/// set (or from both sets when stats_from_all is set); test values are clamped
/// to [0,1]; a constant feature maps to 0 everywhere.
inline std::pair<Dataset, Dataset> normalize_minmax(const Dataset& train,
                                                    const Dataset& test,
                                                    bool stats_from_all = false) {
    if (train.feature_count != test.feature_count)
        throw DimensionError("normalize_minmax: train/test feature counts differ");
    const std::size_t m = train.feature_count;
    std::vector<double> lo(m, std::numeric_limits<double>::infinity());
    std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
    auto absorb = [&](const Dataset& ds) {
        for (const auto& fv : ds.features)
            for (std::size_t j = 0; j < m; ++j) {
                lo[j] = std::min(lo[j], fv[j]);
                hi[j] = std::max(hi[j], fv[j]);
            }
    };
    absorb(train);
    if (stats_from_all) absorb(test);

    auto map = [&](const Dataset& ds, bool clamp) {
        Dataset out = ds;
        for (auto& fv : out.features)
            for (std::size_t j = 0; j < m; ++j) {
                const double range = hi[j] - lo[j];
                double v = range == 0.0 ? 0.0 : (fv[j] - lo[j]) / range;
                if (clamp) v = std::clamp(v, 0.0, 1.0);
                fv[j] = v;
            }
        return out;
    };
    return {map(train, false), map(test, true)};
}

/// Seeded uniform sampling without replacement; |test| = round(fraction * n).
/// The same (dataset, fraction, seed) always yields the same split, and both
/// halves keep the source's relative order.
inline Split train_test_split(const Dataset& ds, double test_fraction,
                              std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw InvalidInput("test_fraction must be in (0,1)");
    if (ds.size() == 0)
        throw InvalidInput("cannot split an empty dataset");
    const std::size_t n = ds.size();
    const auto test_count =
        static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));
    if (test_count >= n)
        throw InvalidInput("split leaves an empty training set");

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates; avoid uniform_int_distribution so the draw
    // sequence is identical on every platform.
    for (std::size_t i = 0; i < test_count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<bool> is_test(n, false);
    for (std::size_t i = 0; i < test_count; ++i) is_test[idx[i]] = true;

    Split split;
    split.seed = seed;
    split.test_fraction = test_fraction;
    split.train.name = ds.name;
    split.test.name = ds.name;
    split.train.feature_count = split.test.feature_count = ds.feature_count;
    split.train.label_names = split.test.label_names = ds.label_names;
    for (std::size_t i = 0; i < n; ++i) {
        Dataset& dst = is_test[i] ? split.test : split.train;
        dst.features.push_back(ds.features[i]);
        dst.labels.push_back(ds.labels[i]);
    }
    return split;
}

} // namespace hdnn

#endif
