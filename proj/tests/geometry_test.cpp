#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cassini/error.hpp"
#include "cassini/geometry.hpp"
#include "support/oracles.hpp"

using namespace cassini;

TEST(DistanceProduct, Examples) {
    EXPECT_DOUBLE_EQ(distance_product({0, 0}, {4, 0}, {2, 0}), 4.0);
    EXPECT_DOUBLE_EQ(distance_product({0, 0}, {4, 0}, {0, 0}), 0.0);
    EXPECT_DOUBLE_EQ(distance_product({0, 0}, {4, 0}, {0, 3}), 15.0);
}

TEST(Detectability, Examples) {
    EXPECT_DOUBLE_EQ(detectability(RadarSet({{0, 0}}, {{4, 0}}), {2, 0}), 4.0);
    // (T1,R): 8*4 = 32, (T2,R): 2*4 = 8
    EXPECT_DOUBLE_EQ(detectability(RadarSet({{0, 0}, {10, 0}}, {{4, 0}}), {8, 0}), 8.0);
    EXPECT_DOUBLE_EQ(detectability(RadarSet({{5, 5}}, {{5, 5}}), {5, 9}), 16.0);
}

TEST(Detectability, NearestPairIdentifiesVoronoiRegion) {
    const RadarSet radars({{0, 0}, {10, 0}}, {{4, 0}, {4, 0}});
    const auto pair = nearest_pair(radars, {8, 1});
    EXPECT_EQ(pair.transmitter, 1u);
    EXPECT_EQ(pair.receiver, 0u);  // tie between coincident receivers -> lowest index
}

TEST(Detectability, RejectsEmptyAndNonFinite) {
    EXPECT_THROW(RadarSet({}, {{0, 0}}), InputError);
    EXPECT_THROW(RadarSet({{0, 0}}, {}), InputError);
    EXPECT_THROW(RadarSet({{NAN, 0}}, {{0, 0}}), InputError);
    EXPECT_THROW(RectField(0.0, 1.0), InputError);
    EXPECT_THROW(RadarConfig(0.0), InputError);
}

TEST(Detectability, FactorizationMatchesPairwiseBruteForce) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> count(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto tx = ref::random_points(rng, count(rng), 100, 100);
        const auto rx = ref::random_points(rng, count(rng), 100, 100);
        const auto p = ref::random_points(rng, 1, 120, 120).front();
        const double a = detectability(RadarSet(tx, rx), p);
        const double b = ref::pairwise_detectability(tx, rx, p);
        ASSERT_LE(ref::rel_diff(a, b), 1e-12) << "trial " << trial;
    }
}

TEST(Detectability, AddingRadarNeverIncreasesAndSwapIsSymmetric) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const RadarSet base(ref::random_points(rng, 3, 50, 50), ref::random_points(rng, 4, 50, 50));
        const auto extra = ref::random_points(rng, 1, 50, 50).front();
        const auto p = ref::random_points(rng, 1, 50, 50).front();
        const double before = detectability(base, p);
        EXPECT_LE(detectability(base.with_transmitter(extra), p), before);
        EXPECT_LE(detectability(base.with_receiver(extra), p), before);
        EXPECT_EQ(detectability(base.swapped(), p), before);
    }
}

TEST(PathDetectability, Examples) {
    const RadarSet at_t({{3, 4}}, {{10, 10}});
    const std::vector<Point> single{{3, 4}};
    EXPECT_EQ(path_detectability(at_t, single), 0.0);

    const RadarSet center({{50, 50}}, {{50, 50}});
    const std::vector<Point> left_edge{{0, 0}, {0, 100}};
    EXPECT_NEAR(path_detectability(center, left_edge), 2500.0, 1e-9);

    const RadarSet pair({{0, 0}}, {{4, 0}});
    const std::vector<Point> vertical{{10, -1}, {10, 1}};
    // Dense oracle: 10 * 6 at y = 0.
    double oracle = 1e300;
    for (int k = 0; k <= 200000; ++k) {
        const double y = -1.0 + 2.0 * k / 200000.0;
        oracle = std::min(oracle, ref::pairwise_detectability({{0, 0}}, {{4, 0}}, {10, y}));
    }
    EXPECT_NEAR(oracle, 60.0, 1e-9);
    EXPECT_NEAR(path_detectability(pair, vertical), 60.0, 1e-5);
}

TEST(PathDetectability, ErrorsAndCustomStep) {
    const RadarSet radars({{0, 0}}, {{1, 0}});
    std::vector<Point> none;
    EXPECT_THROW(path_detectability(radars, none), InputError);
    const std::vector<Point> seg{{0, 1}, {1, 1}};
    EXPECT_THROW(path_detectability(radars, seg, 0.0), InputError);
    // Endpoints are always sampled, so a coarse step still sees the vertex values.
    EXPECT_NEAR(path_detectability(radars, seg, 10.0), std::sqrt(2.0), 1e-12);
}

TEST(RadarConfig, SnrUsesSquaredDistanceProduct) {
    const RadarConfig cfg(2.0);
    EXPECT_DOUBLE_EQ(cfg.snr(4.0), 2.0 / 16.0);
    EXPECT_TRUE(std::isinf(cfg.snr(0.0)));
}

TEST(RectField, LipschitzBound) {
    const RectField field(100, 100);
    const RadarSet inside({{50, 50}}, {{10, 10}});
    EXPECT_NEAR(detectability_lipschitz(field, inside), 2.0 * std::hypot(100, 100), 1e-12);
    const RadarSet outside({{-30, 50}}, {{10, 10}});
    EXPECT_NEAR(detectability_lipschitz(field, outside), 2.0 * (std::hypot(100, 100) + 30.0), 1e-12);
}
