#pragma once

#include "fault_tolerant.hpp"
#include "io.hpp"
#include "metric.hpp"
#include "oracle.hpp"
#include "random.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <variant>

namespace ftclust {

inline constexpr double kBoundTolerance = 1e-9;

struct RunConfig {
    Problem problem = Problem::Center;
    std::size_t k = 0;
    std::size_t ell = 0;
    PointId seed_point = 0;
    double eps = 0.01;
    bool oracle = false;
    std::uint64_t oracle_cap = kDefaultOracleCap;
};

inline const char* problem_name(Problem p) { return p == Problem::Center ? "ftc" : "ftm"; }

/// cost / optimum, with 0/0 read as 1. Empty when the optimum is 0 and the cost is not.
inline std::optional<double> approximation_ratio(double cost, double optimum) {
    if (optimum > 0) {
        return cost / optimum;
    }
    if (cost == 0) {
        return 1.0;
    }
    return std::nullopt;
}

inline bool within_bound(double cost, double optimum, double bound) {
    return cost <= bound * optimum + kBoundTolerance;
}

namespace detail {

inline nlohmann::json ids(const CenterSet& set) { return nlohmann::json(set.members()); }

inline nlohmann::json trace_json(const GonzalezTrace& t) {
    nlohmann::json out;
    out["kind"] = "gonzalez";
    out["centers"] = ids(t.centers);
    out["radii"] = t.radii;
    out["final_radius"] = t.final_radius() ? nlohmann::json(*t.final_radius()) : nlohmann::json(nullptr);
    out["distance_evaluations"] = t.distance_evaluations;
    return out;
}

inline nlohmann::json trace_json(const SwapTrace& t) {
    nlohmann::json out;
    out["kind"] = "local_search";
    out["centers"] = ids(t.centers);
    out["iterations"] = t.iterations;
    out["final_cost"] = t.final_cost;
    out["exhausted"] = t.exhausted;
    out["cost_history"] = t.cost_history;
    return out;
}

}  // namespace detail

/**
 * Solves one instance and returns the result document.
 *
 * Keys are emitted in sorted order and doubles in shortest round-trip form,
 * so equal inputs give byte-identical dumps.
 */
template<MetricSpace M>
nlohmann::json solve_report(const M& metric, const RunConfig& cfg) {
    const FtSolveReport r = cfg.problem == Problem::Center ? ft_center(metric, cfg.k, cfg.ell, cfg.seed_point)
                                                           : ft_median(metric, cfg.k, cfg.ell, cfg.eps);
    nlohmann::json doc;
    doc["problem"] = problem_name(cfg.problem);
    doc["n"] = metric.size();
    doc["params"] = {{"k", r.params.k}, {"ell", r.params.ell}, {"m", r.params.m}};
    doc["final_centers"] = detail::ids(r.final_centers);
    doc["subroutine_centers"] = detail::ids(r.subroutine_centers);
    doc["reinforced"] = detail::ids(r.reinforced);
    doc["padding"] = detail::ids(r.padding);
    doc["cost"] = r.cost;
    std::visit([&](const auto& t) { doc["trace"] = detail::trace_json(t); }, r.subroutine_trace);
    if (cfg.problem == Problem::Center) {
        doc["seed_point"] = cfg.seed_point;
    } else {
        doc["eps"] = cfg.eps;
    }

    if (cfg.oracle) {
        const OracleResult opt = cfg.problem == Problem::Center ? brute_force_ftc(metric, cfg.k, cfg.ell, cfg.oracle_cap)
                                                                : brute_force_ftm(metric, cfg.k, cfg.ell, cfg.oracle_cap);
        const double bound = theorem_bound(cfg.problem, r.params);
        const auto ratio = approximation_ratio(r.cost, opt.optimal_cost);
        doc["oracle"] = {
            {"optimal_cost", opt.optimal_cost},
            {"witness", detail::ids(opt.witness)},
            {"explored", opt.explored},
            {"ratio", ratio ? nlohmann::json(*ratio) : nlohmann::json(nullptr)},
            {"bound", bound},
            {"generic_bound", generic_bound(cfg.problem)},
            {"within_bound", within_bound(r.cost, opt.optimal_cost, bound)},
        };
    }
    return doc;
}

struct BenchConfig {
    std::size_t trials = 0;
    std::size_t n = 0;
    std::size_t k_max = 0;
    std::uint64_t rng_seed = 1;
    double eps = 0.01;
    std::uint64_t oracle_cap = kDefaultOracleCap;
};

struct BenchRow {
    std::size_t k = 0;
    std::size_t ell = 0;
    Problem problem = Problem::Center;
    std::size_t count = 0;
    double max_ratio = 0.0;
    double ratio_sum = 0.0;
    double bound = 0.0;
    bool pass = true;
};

struct BenchSummary {
    BenchConfig config;
    std::vector<BenchRow> rows;   // ordered by (k, ell, problem)

    bool pass() const {
        return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.pass; });
    }

    /// Fixed-format text table; identical configs give identical bytes.
    std::string table() const {
        std::ostringstream out;
        char line[256];
        std::snprintf(line, sizeof line, "# bench trials=%zu n=%zu k_max=%zu rng_seed=%llu\n", config.trials, config.n,
                      config.k_max, static_cast<unsigned long long>(config.rng_seed));
        out << line;
        out << "k\tell\tm\tproblem\ttrials\tmax_ratio\tmean_ratio\tbound\tpass\n";
        for (const auto& r : rows) {
            std::snprintf(line, sizeof line, "%zu\t%zu\t%zu\t%s\t%zu\t%.9f\t%.9f\t%g\t%s\n", r.k, r.ell, r.k / r.ell,
                          problem_name(r.problem), r.count, r.max_ratio,
                          r.count ? r.ratio_sum / static_cast<double>(r.count) : 0.0, r.bound, r.pass ? "PASS" : "FAIL");
            out << line;
        }
        if (!rows.empty()) {
            out << "# overall " << (pass() ? "PASS" : "FAIL") << '\n';
        }
        return out.str();
    }
};

/**
 * Ratio experiment over random unit-square instances.
 *
 * One generator seeded with rng_seed produces every trial's points in trial
 * order. For each k in [1, k_max] and ell in [1, k] both fault-tolerant
 * algorithms run against the exact optima.
 */
inline BenchSummary run_bench(const BenchConfig& cfg) {
    if (cfg.trials > 0 && (cfg.n < 1 || cfg.k_max < 1 || cfg.k_max > cfg.n)) {
        throw std::invalid_argument("bench: need 1 <= k_max <= n");
    }
    BenchSummary summary{cfg, {}};
    if (cfg.trials == 0) {
        return summary;
    }

    std::map<std::tuple<std::size_t, std::size_t, int>, BenchRow> rows;
    UnitRandom rng(cfg.rng_seed);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const Instance inst = random_unit_square(cfg.n, rng);
        for (std::size_t k = 1; k <= cfg.k_max; ++k) {
            const OracleTable opt = brute_force_all(inst, k, cfg.oracle_cap);
            for (std::size_t ell = 1; ell <= k; ++ell) {
                const FtParams params = FtParams::make(k, ell, cfg.n);
                const std::pair<Problem, double> runs[] = {
                    {Problem::Center, ft_center(inst, k, ell, 0).cost},
                    {Problem::Median, ft_median(inst, k, ell, cfg.eps).cost},
                };
                for (const auto& [problem, cost] : runs) {
                    const double best = (problem == Problem::Center ? opt.center : opt.median)[ell - 1].optimal_cost;
                    auto& row = rows[{k, ell, static_cast<int>(problem)}];
                    row.k = k;
                    row.ell = ell;
                    row.problem = problem;
                    row.bound = theorem_bound(problem, params);
                    const double ratio = approximation_ratio(cost, best).value_or(std::numeric_limits<double>::infinity());
                    ++row.count;
                    row.max_ratio = std::max(row.max_ratio, ratio);
                    row.ratio_sum += ratio;
                    row.pass = row.pass && within_bound(cost, best, row.bound);
                }
            }
        }
    }
    for (auto& [key, row] : rows) {
        summary.rows.push_back(row);
    }
    return summary;
}

}  // namespace ftclust
