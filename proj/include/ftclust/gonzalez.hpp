#pragma once

#include "metric.hpp"
#include "types.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ftclust {

struct GonzalezTrace {
    CenterSet centers;           // q_1..q_m in selection order
    std::vector<double> radii;   // r_2..r_m, r_i = d(q_i, {q_1..q_{i-1}})
    std::size_t distance_evaluations = 0;

    /// r_m; absent when m == 1.
    std::optional<double> final_radius() const {
        if (radii.empty()) {
            return std::nullopt;
        }
        return radii.back();
    }
};

namespace detail {

/*
 * Grows `start` farthest-first until it holds `target` points. Each point
 * keeps its distance to the nearest chosen point, so every round costs n
 * distance evaluations, and the round that picks the last point skips its
 * update. Argmax ties go to the smallest index; already chosen points are
 * never re-picked, even when every remaining point sits at distance zero.
 */
template<MetricSpace M>
GonzalezTrace farthest_first_extend(const M& metric, CenterSet start, std::size_t target) {
    const std::size_t n = metric.size();
    GonzalezTrace trace;
    trace.centers = std::move(start);
    if (trace.centers.size() >= target) {
        return trace;
    }

    std::vector<char> chosen(n, 0);
    for (PointId c : trace.centers) {
        chosen[c] = 1;
    }
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    auto absorb = [&](PointId c) {
        for (PointId p = 0; p < n; ++p) {
            const double d = metric.distance(p, c);
            if (d < nearest[p]) {
                nearest[p] = d;
            }
        }
        trace.distance_evaluations += n;
    };
    for (PointId c : trace.centers) {
        absorb(c);
    }

    while (trace.centers.size() < target) {
        PointId best = n;
        double best_dist = -1.0;
        for (PointId p = 0; p < n; ++p) {
            if (!chosen[p] && nearest[p] > best_dist) {
                best = p;
                best_dist = nearest[p];
            }
        }
        chosen[best] = 1;
        trace.centers.insert(best);
        trace.radii.push_back(best_dist);
        if (trace.centers.size() < target) {
            absorb(best);
        }
    }
    return trace;
}

}  // namespace detail

/**
 * Farthest-point traversal for m-center (a 2-approximation).
 *
 * Starts from `seed` and repeatedly adds the point farthest from the centers
 * chosen so far. Uses n * (m - 1) distance evaluations.
 */
template<MetricSpace M>
GonzalezTrace gonzalez_centers(const M& metric, std::size_t m, PointId seed = 0) {
    const std::size_t n = metric.size();
    if (m < 1 || m > n) {
        throw std::invalid_argument("gonzalez: m must lie in [1, n]");
    }
    if (seed >= n) {
        throw std::invalid_argument("gonzalez: seed index out of range");
    }
    return detail::farthest_first_extend(metric, CenterSet{seed}, m);
}

}  // namespace ftclust
