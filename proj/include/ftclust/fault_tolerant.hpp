#pragma once

#include "cost.hpp"
#include "gonzalez.hpp"
#include "local_search.hpp"
#include "metric.hpp"
#include "neighbors.hpp"
#include "types.hpp"

#include <stdexcept>
#include <variant>
#include <vector>

namespace ftclust {

enum class Problem { Center, Median };

/// Approximation factor of the m-center subroutine (farthest-point traversal).
inline constexpr double kGonzalezFactor = 2.0;
/// Certified approximation factor of single-swap local search for m-median.
inline constexpr double kLocalSearchFactor = 5.0;

struct FtSolveReport {
    FtParams params;
    CenterSet subroutine_centers;   // Q
    CenterSet reinforced;           // union of the ell nearest neighbors in P of each q
    CenterSet padding;              // points added to reach k
    CenterSet final_centers;        // reinforced followed by padding, exactly k points
    double cost = 0.0;
    std::variant<GonzalezTrace, SwapTrace> subroutine_trace;
};

/**
 * Union over q in Q of the ell nearest neighbors of q in P, deduplicated.
 * Members appear in order of q, then neighbor rank.
 */
template<MetricSpace M>
CenterSet reinforce(const M& metric, const CenterSet& subroutine_centers, std::size_t ell) {
    const std::size_t n = metric.size();
    if (ell < 1 || ell > n) {
        throw std::invalid_argument("reinforce: ell must lie in [1, n]");
    }
    const std::vector<PointId> everyone = all_points(n);
    CenterSet out;
    for (PointId q : subroutine_centers) {
        for (PointId p : nn_set(metric, std::span<const PointId>(everyone), q, ell)) {
            out.insert(p);
        }
    }
    return out;
}

/// Extends C farthest-first (ties by smallest index) until it holds k points.
template<MetricSpace M>
CenterSet pad_to_k(const M& metric, const CenterSet& centers, std::size_t k) {
    if (k > metric.size()) {
        throw std::invalid_argument("pad_to_k: k exceeds n");
    }
    if (centers.size() > k) {
        throw std::invalid_argument("pad_to_k: set already larger than k");
    }
    if (centers.empty()) {
        throw std::invalid_argument("pad_to_k: cannot pad an empty set");
    }
    return detail::farthest_first_extend(metric, centers, k).centers;
}

namespace detail {

template<MetricSpace M>
void finish_report(const M& metric, FtSolveReport& report) {
    report.reinforced = reinforce(metric, report.subroutine_centers, report.params.ell);
    report.final_centers = pad_to_k(metric, report.reinforced, report.params.k);
    for (std::size_t i = report.reinforced.size(); i < report.final_centers.size(); ++i) {
        report.padding.insert(report.final_centers[i]);
    }
}

}  // namespace detail

/**
 * Fault-tolerant k-center: Gonzalez for m = floor(k/ell) centers, then each
 * center is reinforced with its ell nearest neighbors in P, then padded to k.
 * Within a factor 3 of optimal when ell divides k, 4 otherwise.
 */
template<MetricSpace M>
FtSolveReport ft_center(const M& metric, std::size_t k, std::size_t ell, PointId seed = 0) {
    FtSolveReport report;
    report.params = FtParams::make(k, ell, metric.size());
    auto trace = gonzalez_centers(metric, report.params.m, seed);
    report.subroutine_centers = trace.centers;
    report.subroutine_trace = std::move(trace);
    detail::finish_report(metric, report);
    report.cost = center_cost(metric, report.final_centers, ell);
    return report;
}

/// Fault-tolerant k-median: same reduction with local search as the m-median subroutine.
template<MetricSpace M>
FtSolveReport ft_median(const M& metric, std::size_t k, std::size_t ell, double eps = 0.01) {
    FtSolveReport report;
    report.params = FtParams::make(k, ell, metric.size());
    LocalSearchOptions opts;
    opts.eps = eps;
    auto trace = local_search_medians(metric, report.params.m, opts);
    report.subroutine_centers = trace.centers;
    report.subroutine_trace = std::move(trace);
    detail::finish_report(metric, report);
    report.cost = median_cost(metric, report.final_centers, ell);
    return report;
}

/// Worst-case ratio the analysis guarantees for the given problem and parameters.
inline double theorem_bound(Problem problem, const FtParams& params) {
    if (problem == Problem::Center) {
        return params.divides() ? 3.0 : 4.0;
    }
    return 1.0 + 4.0 * kLocalSearchFactor;
}

/// The generic 1 + 2c (center) or 1 + 4c (median) bound for the subroutine in use.
inline double generic_bound(Problem problem) {
    return problem == Problem::Center ? 1.0 + 2.0 * kGonzalezFactor : 1.0 + 4.0 * kLocalSearchFactor;
}

}  // namespace ftclust
