#include "reference.hpp"

#include <ftclust/neighbors.hpp>
#include <ftclust/random.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace ftclust;

namespace {

const Instance kLine4 = Instance::on_line({0, 1, 10, 11});

CenterSet everyone(std::size_t n) { return CenterSet(all_points(n)); }

CenterSet random_subset(std::size_t n, UnitRandom& rng) {
    std::vector<PointId> ids = all_points(n);
    std::shuffle(ids.begin(), ids.end(), rng.engine());
    ids.resize(rng.between(1, n));
    return CenterSet(ids);
}

}  // namespace

TEST(KthNnDist, SortedLineDistances) {
    const auto inst = Instance::on_line({0, 3, 7});
    const auto all = everyone(3);
    EXPECT_EQ(kth_nn_dist(inst, all, 0, 1), 0.0);
    EXPECT_EQ(kth_nn_dist(inst, all, 0, 2), 3.0);
    EXPECT_EQ(kth_nn_dist(inst, all, 0, 3), 7.0);
}

TEST(KthNnDist, QueryOutsideSet) {
    EXPECT_EQ(kth_nn_dist(kLine4, CenterSet{1, 2}, 3, 2), 10.0);
    EXPECT_EQ(kth_nn_dist(kLine4, CenterSet{1, 2}, 3, 1), 1.0);
}

TEST(KthNnDist, RankOutOfRange) {
    const CenterSet s{1, 2};
    EXPECT_THROW(kth_nn_dist(kLine4, s, 0, 0), std::invalid_argument);
    EXPECT_THROW(kth_nn_dist(kLine4, s, 0, 3), std::invalid_argument);
    EXPECT_THROW(kth_nn_dist(kLine4, CenterSet{}, 0, 1), std::invalid_argument);
    EXPECT_THROW(kth_nn(kLine4, s, 0, 3), std::invalid_argument);
    EXPECT_THROW(nn_set(kLine4, s, 0, 0), std::invalid_argument);
    EXPECT_THROW(kth_nn_dist(kLine4, s, 9, 1), std::invalid_argument);
}

TEST(KthNn, Singleton) {
    for (PointId p = 0; p < 4; ++p) {
        EXPECT_EQ(kth_nn(kLine4, CenterSet{2}, p, 1), 2u);
    }
}

TEST(KthNn, TieBrokenByLowerIndex) {
    const auto inst = Instance::on_line({0, 2, 4});
    EXPECT_EQ(kth_nn(inst, everyone(3), 1, 2), 0u);
    EXPECT_EQ(kth_nn(inst, everyone(3), 1, 3), 2u);
}

TEST(KthNn, ThirdNeighbor) {
    EXPECT_EQ(kth_nn(kLine4, everyone(4), 2, 3), 1u);
}

TEST(KthNn, SelfFirstAmongDuplicates) {
    // points 0 and 2 coincide; each is its own first neighbor
    const auto inst = Instance::on_line({5, 1, 5});
    EXPECT_EQ(kth_nn(inst, everyone(3), 2, 1), 2u);
    EXPECT_EQ(kth_nn(inst, everyone(3), 2, 2), 0u);
    EXPECT_EQ(kth_nn(inst, everyone(3), 0, 1), 0u);
    EXPECT_EQ(kth_nn(inst, everyone(3), 0, 2), 2u);
    // a query outside S falls back to index order
    EXPECT_EQ(kth_nn(inst, CenterSet{2, 0}, 1, 1), 0u);
}

TEST(NnSet, FullSet) {
    EXPECT_TRUE(nn_set(kLine4, everyone(4), 1, 4).same_members(everyone(4)));
}

TEST(NnSet, TwoNearest) {
    EXPECT_EQ(nn_set(kLine4, everyone(4), 0, 2), (CenterSet{0, 1}));
}

TEST(NnSet, SelfIsNearest) {
    const auto inst = Instance::on_line({3, 3, 3});
    for (PointId p = 0; p < 3; ++p) {
        EXPECT_EQ(nn_set(inst, everyone(3), p, 1), (CenterSet{p}));
    }
}

TEST(RankNeighbors, LexicographicOrder) {
    const auto ranked = rank_neighbors(kLine4, std::span<const PointId>(all_points(4)), 2);
    ASSERT_EQ(ranked.size(), 4u);
    EXPECT_EQ(ranked[0].point, 2u);
    EXPECT_EQ(ranked[1].point, 3u);
    EXPECT_EQ(ranked[2].point, 1u);
    EXPECT_EQ(ranked[3].point, 0u);
    for (std::size_t r = 0; r < ranked.size(); ++r) {
        EXPECT_EQ(ranked[r].rank, r + 1);
    }
}

// Property checks on random instances with coarse coordinates so ties occur.
class NeighborProperties : public ::testing::Test {
protected:
    UnitRandom rng{2024};

    Instance gridded(std::size_t n) {
        std::vector<double> coords(2 * n);
        for (double& c : coords) {
            c = static_cast<double>(rng.between(0, 4));
        }
        return Instance::from_coordinates(2, coords);
    }
};

TEST_F(NeighborProperties, AgreesWithFullSort) {
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng.between(1, 12);
        const auto inst = gridded(n);
        const auto s = random_subset(n, rng);
        const PointId p = rng.between(0, n - 1);
        const std::size_t i = rng.between(1, s.size());
        EXPECT_EQ(kth_nn_dist(inst, s, p, i), reference::kth_dist(inst, s.members(), p, i));
        EXPECT_LE(inst.distance(p, kth_nn(inst, s, p, i)), kth_nn_dist(inst, s, p, i));
    }
}

TEST_F(NeighborProperties, MonotoneInRank) {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.between(2, 12);
        const auto inst = gridded(n);
        const auto s = random_subset(n, rng);
        const PointId p = rng.between(0, n - 1);
        for (std::size_t i = 1; i < s.size(); ++i) {
            EXPECT_LE(kth_nn_dist(inst, s, p, i), kth_nn_dist(inst, s, p, i + 1));
        }
        if (s.contains(p)) {
            EXPECT_EQ(kth_nn_dist(inst, s, p, 1), 0.0);
            EXPECT_EQ(kth_nn(inst, s, p, 1), p);
        }
    }
}

TEST_F(NeighborProperties, AntiMonotoneInSet) {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.between(2, 12);
        const auto inst = gridded(n);
        const auto small = random_subset(n, rng);
        CenterSet big = small;
        for (PointId extra : random_subset(n, rng)) {
            big.insert(extra);
        }
        const PointId p = rng.between(0, n - 1);
        for (std::size_t i = 1; i <= small.size(); ++i) {
            EXPECT_LE(kth_nn_dist(inst, big, p, i), kth_nn_dist(inst, small, p, i));
        }
    }
}

TEST_F(NeighborProperties, NnSetHasExactlyIDistinctMembers) {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.between(1, 12);
        const auto inst = gridded(n);
        const auto s = random_subset(n, rng);
        const PointId p = rng.between(0, n - 1);
        const std::size_t i = rng.between(1, s.size());
        const auto nn = nn_set(inst, s, p, i);
        EXPECT_EQ(nn.size(), i);
        EXPECT_EQ(std::set<PointId>(nn.begin(), nn.end()).size(), i);
        for (PointId q : nn) {
            EXPECT_TRUE(s.contains(q));
            EXPECT_LE(inst.distance(p, q), kth_nn_dist(inst, s, p, i));
        }
        EXPECT_EQ(nn[i - 1], kth_nn(inst, s, p, i));
    }
}

TEST_F(NeighborProperties, Lipschitz) {
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng.between(2, 12);
        const auto inst = random_unit_square(n, rng);
        const auto s = random_subset(n, rng);
        const std::size_t i = rng.between(1, s.size());
        const PointId p = rng.between(0, n - 1);
        const PointId q = rng.between(0, n - 1);
        EXPECT_LE(std::abs(kth_nn_dist(inst, s, p, i) - kth_nn_dist(inst, s, q, i)), inst.distance(p, q) + 1e-9);
    }
}
