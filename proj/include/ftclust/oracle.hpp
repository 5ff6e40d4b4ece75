#pragma once

#include "metric.hpp"
#include "neighbors.hpp"
#include "types.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftclust {

inline constexpr std::uint64_t kDefaultOracleCap = 5'000'000;

struct OracleResult {
    double optimal_cost = 0.0;
    CenterSet witness;            // lexicographically smallest optimal k-subset
    std::uint64_t explored = 0;   // candidate sets evaluated
};

/// Exact optima of both objectives for one k and every ell in [1, k].
struct OracleTable {
    std::size_t k = 0;
    std::vector<OracleResult> center;   // center[ell - 1]
    std::vector<OracleResult> median;   // median[ell - 1]
};

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // out * (n - k + i) / i stays integral at every step
        const std::uint64_t num = n - k + i;
        if (out > std::numeric_limits<std::uint64_t>::max() / num) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        out = out * num / i;
    }
    return out;
}

namespace detail {

/*
 * Enumerates all k-subsets of P in lexicographic order and keeps, per ell in
 * [ell_lo, ell_hi] and per objective, the first subset reaching the minimum.
 * Median terms are summed in ascending point order, so the optimal cost equals
 * median_cost() on the witness bit for bit.
 */
template<MetricSpace M>
OracleTable enumerate_subsets(const M& metric, std::size_t k, std::size_t ell_lo, std::size_t ell_hi, std::uint64_t cap) {
    const std::size_t n = metric.size();
    if (k < 1 || k > n) {
        throw std::invalid_argument("oracle: k must lie in [1, n]");
    }
    if (ell_lo < 1 || ell_lo > ell_hi || ell_hi > k) {
        throw std::invalid_argument("oracle: ell must lie in [1, k]");
    }
    const std::uint64_t count = binomial(n, k);
    if (count > cap) {
        throw ResourceLimitError("oracle: C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
                                 std::to_string(count) + " subsets exceeds the cap of " + std::to_string(cap));
    }

    std::vector<double> dist(n * n);
    for (PointId a = 0; a < n; ++a) {
        for (PointId b = 0; b < n; ++b) {
            dist[a * n + b] = metric.distance(a, b);
        }
    }

    const std::size_t width = ell_hi - ell_lo + 1;
    OracleTable table;
    table.k = k;
    table.center.assign(ell_hi, OracleResult{std::numeric_limits<double>::infinity(), {}, count});
    table.median.assign(ell_hi, OracleResult{std::numeric_limits<double>::infinity(), {}, count});

    std::vector<PointId> subset(k);
    for (std::size_t i = 0; i < k; ++i) {
        subset[i] = i;
    }
    std::vector<double> buf(k);
    std::vector<double> worst(width);
    std::vector<double> total(width);

    while (true) {
        std::fill(worst.begin(), worst.end(), 0.0);
        std::fill(total.begin(), total.end(), 0.0);
        for (PointId p = 0; p < n; ++p) {
            const double* row = dist.data() + p * n;
            for (std::size_t j = 0; j < k; ++j) {
                buf[j] = row[subset[j]];
            }
            if (width == 1) {
                std::nth_element(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(ell_lo - 1), buf.end());
            } else {
                std::partial_sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(ell_hi), buf.end());
            }
            for (std::size_t w = 0; w < width; ++w) {
                const double d = buf[ell_lo - 1 + w];
                worst[w] = std::max(worst[w], d);
                total[w] += d;
            }
        }
        for (std::size_t w = 0; w < width; ++w) {
            auto& c = table.center[ell_lo - 1 + w];
            if (worst[w] < c.optimal_cost) {
                c.optimal_cost = worst[w];
                c.witness = CenterSet(subset);
            }
            auto& md = table.median[ell_lo - 1 + w];
            if (total[w] < md.optimal_cost) {
                md.optimal_cost = total[w];
                md.witness = CenterSet(subset);
            }
        }

        // next combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            subset[j] = subset[j - 1] + 1;
        }
    }
    return table;
}

}  // namespace detail

/// Exact fault-tolerant k-center optimum by enumeration of all k-subsets.
template<MetricSpace M>
OracleResult brute_force_ftc(const M& metric, std::size_t k, std::size_t ell, std::uint64_t cap = kDefaultOracleCap) {
    return detail::enumerate_subsets(metric, k, ell, ell, cap).center[ell - 1];
}

/// Exact fault-tolerant k-median optimum by enumeration of all k-subsets.
template<MetricSpace M>
OracleResult brute_force_ftm(const M& metric, std::size_t k, std::size_t ell, std::uint64_t cap = kDefaultOracleCap) {
    return detail::enumerate_subsets(metric, k, ell, ell, cap).median[ell - 1];
}

/// Both exact optima for every ell in [1, k] from a single enumeration.
template<MetricSpace M>
OracleTable brute_force_all(const M& metric, std::size_t k, std::uint64_t cap = kDefaultOracleCap) {
    return detail::enumerate_subsets(metric, k, 1, k, cap);
}

/**
 * Scoops min-radius h-balls out of X, collecting their centers from Y.
 *
 * Runs floor(|X|/h) rounds. Round i picks the y in Y minimizing the distance
 * to its h-th nearest remaining X point (ties by index), then removes those h
 * points from X. The result S satisfies |S| <= |X|/h and, for every y in Y,
 * d_S^1(y) <= 2 d_X^h(y). Repeated picks are kept once.
 */
template<MetricSpace M>
CenterSet greedy_scoop(const M& metric, const CenterSet& xs, const CenterSet& ys, std::size_t h) {
    if (h < 1 || h > xs.size()) {
        throw std::invalid_argument("greedy_scoop: h must lie in [1, |X|]");
    }
    if (ys.empty()) {
        throw std::invalid_argument("greedy_scoop: Y must be non-empty");
    }
    std::vector<PointId> remaining = xs.members();
    const std::size_t rounds = xs.size() / h;
    CenterSet out;
    for (std::size_t round = 0; round < rounds; ++round) {
        const std::span<const PointId> view(remaining);
        PointId best = ys[0];
        double best_radius = std::numeric_limits<double>::infinity();
        for (PointId y : ys.sorted()) {
            const double r = kth_nn_dist(metric, view, y, h);
            if (r < best_radius) {
                best_radius = r;
                best = y;
            }
        }
        const CenterSet ball = nn_set(metric, view, best, h);
        std::erase_if(remaining, [&](PointId x) { return ball.contains(x); });
        out.insert(best);
    }
    return out;
}

}  // namespace ftclust
