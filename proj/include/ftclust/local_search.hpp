#pragma once

#include "cost.hpp"
#include "gonzalez.hpp"
#include "metric.hpp"
#include "types.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ftclust {

struct SwapTrace {
    CenterSet centers;
    std::size_t iterations = 0;          // accepted swaps
    double final_cost = 0.0;             // median_cost(centers, 1)
    bool exhausted = false;              // stopped by max_iters before reaching a local optimum
    std::vector<double> cost_history;    // cost before the first swap, then after each accepted swap
};

struct LocalSearchOptions {
    double eps = 0.01;
    std::size_t max_iters = 0;           // 0 selects 10 * n * m
    std::optional<CenterSet> init;       // default: Gonzalez centers seeded at point 0
};

namespace detail {

/// Nearest and second-nearest center per point, for O(n) single-swap deltas.
template<MetricSpace M>
class SwapEvaluator {
public:
    SwapEvaluator(const M& metric, const CenterSet& centers) : metric_(metric) {
        const std::size_t n = metric.size();
        first_.assign(n, Slot{});
        second_.assign(n, Slot{});
        for (PointId p = 0; p < n; ++p) {
            for (PointId c : centers) {
                const Slot s{static_cast<double>(metric.distance(p, c)), c};
                if (s.dist < first_[p].dist) {
                    second_[p] = first_[p];
                    first_[p] = s;
                } else if (s.dist < second_[p].dist) {
                    second_[p] = s;
                }
            }
        }
    }

    /// Change in the ell=1 median cost when `out` is replaced by `in`.
    double delta(PointId out, PointId in) const {
        double total = 0.0;
        for (PointId p = 0; p < first_.size(); ++p) {
            const double remaining = first_[p].center == out ? second_[p].dist : first_[p].dist;
            const double updated = std::min(remaining, static_cast<double>(metric_.distance(p, in)));
            total += updated - first_[p].dist;
        }
        return total;
    }

private:
    struct Slot {
        double dist = std::numeric_limits<double>::infinity();
        PointId center = std::numeric_limits<PointId>::max();
    };

    const M& metric_;
    std::vector<Slot> first_;
    std::vector<Slot> second_;
};

}  // namespace detail

/**
 * median_cost(C - out + in, 1) - median_cost(C, 1).
 *
 * Requires out in C and in not in C.
 */
template<MetricSpace M>
double median_cost_delta(const M& metric, const CenterSet& centers, PointId out, PointId in) {
    if (out >= metric.size() || in >= metric.size()) {
        throw std::invalid_argument("swap index out of range");
    }
    if (!centers.contains(out)) {
        throw std::invalid_argument("swap: removed point is not a center");
    }
    if (centers.contains(in)) {
        throw std::invalid_argument("swap: inserted point is already a center");
    }
    return detail::SwapEvaluator<M>(metric, centers).delta(out, in);
}

/**
 * Single-swap local search for m-median.
 *
 * A swap is accepted only when it brings the cost below (1 - eps/m) times the
 * current cost. Candidates are scanned in (out index, in index) order and the
 * first accepted swap is applied. For m = 1 all n single centers are evaluated
 * directly and the cheapest (lowest index on ties) is returned.
 */
template<MetricSpace M>
SwapTrace local_search_medians(const M& metric, std::size_t m, const LocalSearchOptions& opts = {}) {
    const std::size_t n = metric.size();
    if (m < 1 || m > n) {
        throw std::invalid_argument("local search: m must lie in [1, n]");
    }
    if (!(opts.eps > 0)) {
        throw std::invalid_argument("local search: eps must be positive");
    }

    SwapTrace trace;
    if (m == 1) {
        double best = std::numeric_limits<double>::infinity();
        PointId arg = 0;
        for (PointId c = 0; c < n; ++c) {
            const double cost = median_cost(metric, CenterSet{c}, 1);
            if (cost < best) {
                best = cost;
                arg = c;
            }
        }
        trace.centers = CenterSet{arg};
        trace.final_cost = best;
        trace.cost_history = {best};
        return trace;
    }

    if (opts.init) {
        if (opts.init->size() != m) {
            throw std::invalid_argument("local search: init must hold exactly m centers");
        }
        for (PointId c : *opts.init) {
            if (c >= n) {
                throw std::invalid_argument("local search: init index out of range");
            }
        }
        trace.centers = *opts.init;
    } else {
        trace.centers = gonzalez_centers(metric, m, 0).centers;
    }
    const std::size_t max_iters = opts.max_iters ? opts.max_iters : 10 * n * m;
    const double shrink = 1.0 - opts.eps / static_cast<double>(m);

    double cost = median_cost(metric, trace.centers, 1);
    trace.cost_history.push_back(cost);

    // First improving swap in scan order, if any.
    auto find_swap = [&]() -> std::optional<std::pair<PointId, PointId>> {
        const detail::SwapEvaluator<M> eval(metric, trace.centers);
        std::vector<char> is_center(n, 0);
        for (PointId c : trace.centers) {
            is_center[c] = 1;
        }
        for (PointId out : trace.centers.sorted()) {
            for (PointId in = 0; in < n; ++in) {
                if (!is_center[in] && cost + eval.delta(out, in) < shrink * cost) {
                    return std::pair{out, in};
                }
            }
        }
        return std::nullopt;
    };

    bool local_optimum = false;
    while (trace.iterations < max_iters) {
        const auto swap = find_swap();
        if (!swap) {
            local_optimum = true;
            break;
        }
        std::vector<PointId> members = trace.centers.members();
        std::replace(members.begin(), members.end(), swap->first, swap->second);
        trace.centers = CenterSet(std::move(members));
        cost = median_cost(metric, trace.centers, 1);
        trace.cost_history.push_back(cost);
        ++trace.iterations;
    }
    if (!local_optimum) {
        local_optimum = !find_swap();
    }
    trace.exhausted = !local_optimum;
    trace.final_cost = cost;
    return trace;
}

}  // namespace ftclust
