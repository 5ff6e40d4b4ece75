#pragma once

#include "metric.hpp"
#include "types.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace ftclust {

struct RankedNeighbor {
    PointId point;
    double dist;
    std::size_t rank;  // 1-based
};

namespace detail {

struct Candidate {
    double dist;
    PointId point;
};

/*
 * Neighbor order: by distance, then the query point itself ahead of any other
 * point at the same distance, then by index. The middle key only matters when
 * duplicates sit at distance zero; it keeps p its own first neighbor whenever p
 * is in S.
 */
struct NeighborLess {
    PointId query;

    bool operator()(const Candidate& a, const Candidate& b) const {
        return std::make_tuple(a.dist, a.point != query, a.point) < std::make_tuple(b.dist, b.point != query, b.point);
    }
};

inline void check_rank(std::size_t i, std::size_t set_size) {
    if (set_size == 0) {
        throw std::invalid_argument("neighbor query over an empty set");
    }
    if (i < 1 || i > set_size) {
        throw std::invalid_argument("neighbor rank " + std::to_string(i) + " outside [1, " + std::to_string(set_size) + "]");
    }
}

template<MetricSpace M>
void check_point(const M& metric, PointId p) {
    if (p >= metric.size()) {
        throw std::invalid_argument("point index out of range");
    }
}

template<MetricSpace M>
std::vector<Candidate> candidates(const M& metric, std::span<const PointId> set, PointId p) {
    check_point(metric, p);
    std::vector<Candidate> out;
    out.reserve(set.size());
    for (PointId s : set) {
        check_point(metric, s);
        out.push_back({static_cast<double>(metric.distance(p, s)), s});
    }
    return out;
}

/// Places the rank-i candidate (1-based) at position i-1 and everything closer before it.
template<MetricSpace M>
std::vector<Candidate> select_rank(const M& metric, std::span<const PointId> set, PointId p, std::size_t i) {
    check_rank(i, set.size());
    auto cands = candidates(metric, set, p);
    std::nth_element(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(i - 1), cands.end(), NeighborLess{p});
    return cands;
}

}  // namespace detail

/// All of P, as a list of indices.
inline std::vector<PointId> all_points(std::size_t n) {
    std::vector<PointId> out(n);
    std::iota(out.begin(), out.end(), PointId{0});
    return out;
}

/// Every member of S ranked by (distance, index) from p.
template<MetricSpace M>
std::vector<RankedNeighbor> rank_neighbors(const M& metric, std::span<const PointId> set, PointId p) {
    auto cands = detail::candidates(metric, set, p);
    std::sort(cands.begin(), cands.end(), detail::NeighborLess{p});
    std::vector<RankedNeighbor> out;
    out.reserve(cands.size());
    for (std::size_t r = 0; r < cands.size(); ++r) {
        out.push_back({cands[r].point, cands[r].dist, r + 1});
    }
    return out;
}

/// Radius of the smallest closed ball at p holding at least i members of S.
template<MetricSpace M>
double kth_nn_dist(const M& metric, std::span<const PointId> set, PointId p, std::size_t i) {
    return detail::select_rank(metric, set, p, i)[i - 1].dist;
}

/// The i-th nearest member of S to p.
template<MetricSpace M>
PointId kth_nn(const M& metric, std::span<const PointId> set, PointId p, std::size_t i) {
    return detail::select_rank(metric, set, p, i)[i - 1].point;
}

/// The i nearest members of S to p, in rank order. Always exactly i points.
template<MetricSpace M>
CenterSet nn_set(const M& metric, std::span<const PointId> set, PointId p, std::size_t i) {
    auto cands = detail::select_rank(metric, set, p, i);
    std::sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(i), detail::NeighborLess{p});
    std::vector<PointId> out;
    out.reserve(i);
    for (std::size_t r = 0; r < i; ++r) {
        out.push_back(cands[r].point);
    }
    return CenterSet(std::move(out));
}

template<MetricSpace M>
double kth_nn_dist(const M& metric, const CenterSet& set, PointId p, std::size_t i) {
    return kth_nn_dist(metric, std::span<const PointId>(set.members()), p, i);
}

template<MetricSpace M>
PointId kth_nn(const M& metric, const CenterSet& set, PointId p, std::size_t i) {
    return kth_nn(metric, std::span<const PointId>(set.members()), p, i);
}

template<MetricSpace M>
CenterSet nn_set(const M& metric, const CenterSet& set, PointId p, std::size_t i) {
    return nn_set(metric, std::span<const PointId>(set.members()), p, i);
}

}  // namespace ftclust
