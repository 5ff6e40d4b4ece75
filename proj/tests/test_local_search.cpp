#include "reference.hpp"

#include <ftclust/cost.hpp>
#include <ftclust/local_search.hpp>
#include <ftclust/neighbors.hpp>
#include <ftclust/random.hpp>

#include <gtest/gtest.h>

using namespace ftclust;

namespace {
const Instance kLine4 = Instance::on_line({0, 1, 10, 11});
}

TEST(LocalSearch, EveryPointACenter) {
    const auto t = local_search_medians(kLine4, 4);
    EXPECT_TRUE(t.centers.same_members(CenterSet(all_points(4))));
    EXPECT_EQ(t.final_cost, 0.0);
    EXPECT_EQ(t.iterations, 0u);
    EXPECT_FALSE(t.exhausted);
}

TEST(LocalSearch, SingleMedianPicksLowestIndexOptimum) {
    // single-center costs are 22, 20, 20, 22
    for (PointId c = 0; c < 4; ++c) {
        EXPECT_EQ(median_cost(kLine4, CenterSet{c}, 1), (c == 0 || c == 3) ? 22.0 : 20.0);
    }
    const auto t = local_search_medians(kLine4, 1);
    EXPECT_EQ(t.centers, (CenterSet{1}));
    EXPECT_EQ(t.final_cost, 20.0);
}

TEST(LocalSearch, TwoMedians) {
    const auto t = local_search_medians(kLine4, 2);
    EXPECT_EQ(t.final_cost, 2.0);
    ASSERT_EQ(t.centers.size(), 2u);
    const auto s = t.centers.sorted();
    EXPECT_LE(s[0], 1u);
    EXPECT_GE(s[1], 2u);
    EXPECT_EQ(reference::optimal_median(kLine4, 2, 1).cost, 2.0);
}

TEST(LocalSearch, ExplicitInitIsImproved) {
    LocalSearchOptions opts;
    opts.init = CenterSet{0, 1};
    const auto t = local_search_medians(kLine4, 2, opts);
    EXPECT_EQ(t.cost_history.front(), 19.0);
    EXPECT_EQ(t.final_cost, 2.0);
    EXPECT_GE(t.iterations, 1u);
}

TEST(LocalSearch, ExhaustionIsReported) {
    LocalSearchOptions opts;
    opts.init = CenterSet{0, 1};
    opts.max_iters = 1;
    const auto t = local_search_medians(Instance::on_line({0, 1, 2, 10, 11, 12, 30, 31}), 2, opts);
    EXPECT_EQ(t.iterations, 1u);
    EXPECT_TRUE(t.exhausted);
}

TEST(LocalSearch, Errors) {
    EXPECT_THROW(local_search_medians(kLine4, 5), std::invalid_argument);
    EXPECT_THROW(local_search_medians(kLine4, 0), std::invalid_argument);
    LocalSearchOptions bad;
    bad.eps = 0;
    EXPECT_THROW(local_search_medians(kLine4, 2, bad), std::invalid_argument);
    LocalSearchOptions wrong_size;
    wrong_size.init = CenterSet{0};
    EXPECT_THROW(local_search_medians(kLine4, 2, wrong_size), std::invalid_argument);
}

TEST(MedianCostDelta, Fixtures) {
    EXPECT_EQ(median_cost_delta(kLine4, CenterSet{0, 2}, 0, 1), 0.0);
    const auto dup = Instance::on_line({0, 5, 5, 9});
    EXPECT_EQ(median_cost_delta(dup, CenterSet{0, 1}, 1, 2), 0.0);
    // moving the left center from 0 to 1 on {0,1,2}: 3 -> 2
    const auto three = Instance::on_line({0, 1, 2});
    EXPECT_EQ(median_cost_delta(three, CenterSet{0}, 0, 1), -1.0);
}

TEST(MedianCostDelta, MembershipErrors) {
    EXPECT_THROW(median_cost_delta(kLine4, CenterSet{0, 2}, 1, 3), std::invalid_argument);
    EXPECT_THROW(median_cost_delta(kLine4, CenterSet{0, 2}, 0, 2), std::invalid_argument);
    EXPECT_THROW(median_cost_delta(kLine4, CenterSet{0, 2}, 0, 9), std::invalid_argument);
}

TEST(MedianCostDelta, MatchesRecomputation) {
    UnitRandom rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng.between(2, 15);
        const auto inst = random_unit_square(n, rng);
        std::vector<PointId> ids = all_points(n);
        std::shuffle(ids.begin(), ids.end(), rng.engine());
        const std::size_t m = rng.between(1, n - 1);
        const CenterSet c(std::vector<PointId>(ids.begin(), ids.begin() + m));
        const PointId out = c[rng.between(0, m - 1)];
        const PointId in = ids[rng.between(m, n - 1)];
        std::vector<PointId> swapped = c.members();
        std::replace(swapped.begin(), swapped.end(), out, in);
        const double expected = reference::median_cost(inst, swapped, 1) - reference::median_cost(inst, c.members(), 1);
        EXPECT_NEAR(median_cost_delta(inst, c, out, in), expected, 1e-9);
    }
}

TEST(LocalSearch, LocalOptimalityAndApproximation) {
    UnitRandom rng(41);
    const double eps = 0.01;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng.between(1, 10);
        const auto inst = random_unit_square(n, rng);
        const std::size_t m = rng.between(1, n);
        LocalSearchOptions opts;
        opts.eps = eps;
        const auto t = local_search_medians(inst, m, opts);
        ASSERT_FALSE(t.exhausted);
        EXPECT_EQ(t.centers.size(), m);
        EXPECT_EQ(t.final_cost, median_cost(inst, t.centers, 1));
        for (std::size_t i = 1; i < t.cost_history.size(); ++i) {
            EXPECT_LE(t.cost_history[i], t.cost_history[i - 1]);
        }
        for (PointId out : t.centers) {
            for (PointId in = 0; in < n; ++in) {
                if (!t.centers.contains(in)) {
                    EXPECT_GE(median_cost_delta(inst, t.centers, out, in),
                              -(eps / static_cast<double>(m)) * t.final_cost - 1e-9);
                }
            }
        }
        const double opt = reference::optimal_median(inst, m, 1).cost;
        EXPECT_LE(t.final_cost, 5 * opt + 1e-9);
    }
}
