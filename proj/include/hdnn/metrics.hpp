#ifndef HDNN_METRICS_HPP
#define HDNN_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hdnn/errors.hpp"

namespace hdnn {

/// Ordered sequence of finite real feature values.
using FeatureVector = std::vector<double>;

enum class Metric { Hassanat, Manhattan, Euclidean };

inline Metric parse_metric(std::string_view name) {
    if (name == "hassanat") return Metric::Hassanat;
    if (name == "manhattan") return Metric::Manhattan;
    if (name == "euclidean") return Metric::Euclidean;
    throw InvalidInput("unknown metric '" + std::string(name) +
                       "' (expected hassanat|manhattan|euclidean)");
}

inline std::string_view metric_name(Metric m) {
    switch (m) {
        case Metric::Hassanat: return "hassanat";
        case Metric::Manhattan: return "manhattan";
        case Metric::Euclidean: return "euclidean";
    }
    return "?";
}

/// Bounded per-dimension dissimilarity in [0, 1). Zero exactly when a == b;
/// a single dimension can never contribute 1 or more, however large the
/// magnitudes involved.
inline double hassanat_component(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw InvalidInput("hassanat_component: non-finite input");
    const auto [lo, hi] = std::minmax(a, b);
    if (lo >= 0.0)
        return 1.0 - (1.0 + lo) / (1.0 + hi);
    // Negative minimum: shift both values up by |lo| so the ratio form applies.
    const double shift = -lo;
    return 1.0 - (1.0 + lo + shift) / (1.0 + hi + shift);
}

namespace detail {
inline void require_same_dimension(std::span<const double> a,
                                   std::span<const double> b) {
    if (a.size() != b.size())
        throw DimensionError("vector dimension mismatch: " +
                             std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
}
} // namespace detail

/// Sum of hassanat_component over all dimensions; lies in [0, m).
inline double hassanat_distance(std::span<const double> a,
                                std::span<const double> b) {
    detail::require_same_dimension(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += hassanat_component(a[i], b[i]);
    return sum;
}

inline double manhattan_distance(std::span<const double> a,
                                 std::span<const double> b) {
    detail::require_same_dimension(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += std::fabs(a[i] - b[i]);
    return sum;
}

inline double euclidean_distance(std::span<const double> a,
                                 std::span<const double> b) {
    detail::require_same_dimension(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

inline double distance(Metric m, std::span<const double> a,
                       std::span<const double> b) {
    switch (m) {
        case Metric::Hassanat: return hassanat_distance(a, b);
        case Metric::Manhattan: return manhattan_distance(a, b);
        case Metric::Euclidean: return euclidean_distance(a, b);
    }
    throw InvalidInput("distance: bad metric tag");
}

} // namespace hdnn

#endif
