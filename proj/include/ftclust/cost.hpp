#pragma once

#include "metric.hpp"
#include "types.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ftclust {

/**
 * d_C^ell(p) for every p in P, indexed by point.
 *
 * Only the distance value is needed here, so ties between equidistant centers
 * do not matter and a plain nth_element over distances suffices.
 */
template<MetricSpace M>
std::vector<double> ell_distances(const M& metric, const CenterSet& centers, std::size_t ell) {
    if (ell < 1 || ell > centers.size()) {
        throw std::invalid_argument("ell must lie in [1, |C|]");
    }
    const std::size_t n = metric.size();
    for (PointId c : centers) {
        if (c >= n) {
            throw std::invalid_argument("center index out of range");
        }
    }
    std::vector<double> out(n);
    std::vector<double> buf(centers.size());
    for (PointId p = 0; p < n; ++p) {
        for (std::size_t j = 0; j < centers.size(); ++j) {
            buf[j] = metric.distance(p, centers[j]);
        }
        if (ell == 1) {
            out[p] = *std::min_element(buf.begin(), buf.end());
        } else {
            std::nth_element(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(ell - 1), buf.end());
            out[p] = buf[ell - 1];
        }
    }
    return out;
}

/// Fault-tolerant k-center cost: max over p of the distance to its ell-th nearest center.
template<MetricSpace M>
double center_cost(const M& metric, const CenterSet& centers, std::size_t ell) {
    const auto terms = ell_distances(metric, centers, ell);
    return *std::max_element(terms.begin(), terms.end());
}

/// Fault-tolerant k-median cost, summed in ascending point order.
template<MetricSpace M>
double median_cost(const M& metric, const CenterSet& centers, std::size_t ell) {
    double total = 0.0;
    for (double t : ell_distances(metric, centers, ell)) {
        total += t;
    }
    return total;
}

}  // namespace ftclust
