#pragma once

#include "metric.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ftclust {

/*
 * Uniform doubles in [0, 1) from the top 53 bits of std::mt19937_64. Both the
 * engine and this conversion are fully specified, unlike
 * std::uniform_real_distribution, so generated instances match across
 * standard libraries.
 */
class UnitRandom {
public:
    explicit UnitRandom(std::uint64_t seed) : engine_(seed) {}

    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(next() * static_cast<double>(hi - lo + 1));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// n points drawn uniformly from the unit square, x then y per point.
inline Instance random_unit_square(std::size_t n, UnitRandom& rng) {
    std::vector<double> coords(2 * n);
    for (double& c : coords) {
        c = rng.next();
    }
    return Instance::from_coordinates(2, std::move(coords));
}

}  // namespace ftclust
