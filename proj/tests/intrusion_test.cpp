#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

#include "cassini/error.hpp"
#include "cassini/intrusion.hpp"
#include "support/oracles.hpp"

using namespace cassini;

namespace {

struct TinyGraph {
    std::vector<double> w;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> adj;
    std::vector<std::size_t> entrance, destination;
    std::vector<bool> is_entrance, is_destination;
};

// rows x cols lattice; row 0 attaches to s, the last row to t.
TinyGraph lattice(std::size_t rows, std::size_t cols, const std::vector<double>& w) {
    TinyGraph g;
    g.w = w;
    g.adj.resize(w.size());
    g.is_entrance.assign(w.size(), false);
    g.is_destination.assign(w.size(), false);
    auto link = [&](std::size_t a, std::size_t b) {
        g.edges.emplace_back(a, b);
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t v = r * cols + c;
            if (c + 1 < cols) link(v, v + 1);
            if (r + 1 < rows) link(v, v + cols);
            if (r == 0) { g.entrance.push_back(v); g.is_entrance[v] = true; }
            if (r + 1 == rows) { g.destination.push_back(v); g.is_destination[v] = true; }
        }
    }
    return g;
}

// Widest path by repeatedly settling the vertex with the largest reachable bottleneck.
double widest(const TinyGraph& g) {
    const std::size_t n = g.w.size();
    std::vector<double> best(n, -std::numeric_limits<double>::infinity());
    std::vector<bool> done(n, false);
    for (std::size_t v : g.entrance) best[v] = g.w[v];
    for (;;) {
        std::size_t u = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!done[v] && std::isfinite(best[v]) && (u == n || best[v] > best[u])) u = v;
        }
        if (u == n) return -std::numeric_limits<double>::infinity();
        if (g.is_destination[u]) return best[u];
        done[u] = true;
        for (std::size_t v : g.adj[u]) best[v] = std::max(best[v], std::min(best[u], g.w[v]));
    }
}

void expect_valid_path(const TinyGraph& g, const GraphPath& p) {
    ASSERT_FALSE(p.vertices.empty());
    EXPECT_TRUE(g.is_entrance[p.vertices.front()]);
    EXPECT_TRUE(g.is_destination[p.vertices.back()]);
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        lo = std::min(lo, g.w[p.vertices[i]]);
        if (i == 0) continue;
        const auto& nb = g.adj[p.vertices[i - 1]];
        EXPECT_NE(std::find(nb.begin(), nb.end(), p.vertices[i]), nb.end());
    }
    EXPECT_EQ(lo, p.weight);
}

RadarSet random_radars(std::mt19937_64& rng, std::size_t m, std::size_t n, double w, double h) {
    return RadarSet(ref::random_points(rng, m, w, h), ref::random_points(rng, n, w, h));
}

}  // namespace

TEST(Quantize, Bands) {
    EXPECT_EQ(quantize_band(7.3, 2.0), 3);
    EXPECT_EQ(quantize_band(6.0, 2.0), 3);
    EXPECT_EQ(quantize_band(0.0, 1.0), 0);
    EXPECT_EQ(quantize_band(0.3, 0.1), 2);  // 3 * 0.1 rounds above 0.3
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uv(0.0, 1e4);
    for (double eps : {0.1, 0.3, 0.5, 1.0, 7.0}) {
        for (int i = 0; i < 20000; ++i) {
            const double v = uv(rng);
            const auto k = quantize_band(v, eps);
            ASSERT_LE(static_cast<double>(k) * eps, v);
            ASSERT_LT(v, static_cast<double>(k) * eps + eps);
        }
    }
}

TEST(Grid, ShapeAndErrors) {
    const auto s = grid_shape(RectField(100, 100), 0.25);
    EXPECT_EQ(s.nx, 400u);
    EXPECT_EQ(s.ny, 400u);
    const auto r = grid_shape(RectField(10, 3), 4.0 / 3.0);
    EXPECT_EQ(r.nx, 8u);
    EXPECT_EQ(r.ny, 3u);
    EXPECT_DOUBLE_EQ(r.cell_width, 1.25);
    EXPECT_DOUBLE_EQ(r.center(0, 0).x, 0.625);
    EXPECT_DOUBLE_EQ(r.center(0, 0).y, 0.5);
    EXPECT_THROW(grid_shape(RectField(10, 10), 0.0), InputError);
    EXPECT_THROW(grid_shape(RectField(10, 10), -1.0), InputError);
    EXPECT_THROW(grid_shape(RectField(10, 10), 11.0), InputError);
    EXPECT_THROW(grid_shape(RectField(1e6, 1e6), 1.0), InfeasibleError);
}

TEST(Grid, CellOnTransmitterHasZeroWeight) {
    const RadarSet radars({{0.125, 0.125}}, {{5.0, 5.0}});
    const auto g = build_grid(RectField(10, 10), radars, 1.0, 0.25);
    EXPECT_EQ(g.weight(g.shape.index(0, 0)), 0.0);
    const RadarSet other({{1.0, 1.0}}, {{3.0, 3.0}});
    const auto single = build_grid(RectField(1, 1), other, 2.0, 1.0);
    ASSERT_EQ(single.shape.size(), 1u);
    EXPECT_DOUBLE_EQ(single.detectability[0], detectability(other, {0.5, 0.5}));
    EXPECT_EQ(single.weight(0), 2.0 * std::floor(detectability(other, {0.5, 0.5}) / 2.0));
}

TEST(Grid, CellInvariants) {
    std::mt19937_64 rng(99);
    const RectField field(60, 40);
    const auto radars = random_radars(rng, 3, 4, 60, 40);
    const auto g = build_grid(field, radars, 0.7, 0.5, 2);
    for (std::size_t i = 0; i < g.shape.size(); ++i) {
        const Point c = g.shape.center(i);
        const auto np = nearest_pair(radars, c);
        ASSERT_EQ(g.nearest_transmitter[i], np.transmitter);
        ASSERT_EQ(g.nearest_receiver[i], np.receiver);
        ASSERT_LE(ref::rel_diff(g.detectability[i],
                                    ref::pairwise_detectability(radars.transmitters(), radars.receivers(), c)),
                  1e-12);
        ASSERT_LE(g.weight(i), g.detectability[i]);
        ASSERT_LT(g.detectability[i], g.weight(i) + g.epsilon);
    }
}

TEST(Grid, ThreadCountDoesNotChangeResult) {
    std::mt19937_64 rng(5);
    const RectField field(100, 100);
    const auto radars = random_radars(rng, 4, 6, 100, 100);
    const auto a = build_grid(field, radars, 0.5, 0.5, 1);
    const auto b = build_grid(field, radars, 0.5, 0.5, 4);
    EXPECT_EQ(a.band, b.band);
    EXPECT_EQ(a.detectability, b.detectability);
    EXPECT_EQ(a.nearest_transmitter, b.nearest_transmitter);
    EXPECT_EQ(a.nearest_receiver, b.nearest_receiver);
}

TEST(Bottleneck, Corridor) {
    const SubregionGraph g({5, 2, 9}, {{0, 1}, {1, 2}}, {0}, {2});
    const auto p = max_weight_path(g);
    EXPECT_EQ(p.weight, 2.0);
    EXPECT_EQ(p.vertices, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(g.source(), 3u);
    EXPECT_EQ(g.sink(), 4u);
    EXPECT_EQ(g.weight(g.source()), SubregionGraph::kVirtualWeight);
}

TEST(Bottleneck, TwoByThreeDetour) {
    // 0 1 2
    // 3 4 5   s attaches to the left column, t to the right column.
    const std::vector<double> w{5, 2, 9, 5, 8, 9};
    const std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
    const SubregionGraph g(w, e, {0, 3}, {2, 5});
    const auto p = max_weight_path(g);
    EXPECT_EQ(p.weight, 5.0);
    std::vector<std::vector<std::size_t>> adj(6);
    for (auto [a, b] : e) { adj[a].push_back(b); adj[b].push_back(a); }
    EXPECT_EQ(ref::enumerate_bottleneck(w, adj, {true, false, false, true, false, false},
                                            {false, false, true, false, false, true}),
              5.0);
}

TEST(Bottleneck, EqualWeightsAndSharedVertex) {
    const SubregionGraph g({4, 4, 4, 4}, {{0, 1}, {1, 2}, {2, 3}}, {0}, {3});
    EXPECT_EQ(max_weight_path(g).weight, 4.0);
    // A vertex that is both an entrance and a destination forms a one-cell path.
    const SubregionGraph one({3, 1}, {{0, 1}}, {0, 1}, {0});
    const auto p = max_weight_path(one);
    EXPECT_EQ(p.weight, 3.0);
    EXPECT_EQ(p.vertices, (std::vector<std::size_t>{0}));
}

TEST(Bottleneck, DisconnectedAndBadInput) {
    const SubregionGraph g({1, 1}, {}, {0}, {1});
    EXPECT_THROW(max_weight_path(g), InfeasibleError);
    EXPECT_THROW(SubregionGraph({1, 1}, {{0, 2}}, {0}, {1}), InputError);
    EXPECT_THROW(SubregionGraph({1, NAN}, {}, {0}, {1}), InputError);
}

TEST(Bottleneck, RandomLatticesMatchReferences) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> uw(0, 9);
    std::uniform_int_distribution<std::size_t> us(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = us(rng);
        const std::size_t cols = us(rng);
        std::vector<double> w(rows * cols);
        for (double& x : w) x = uw(rng);
        const auto tg = lattice(rows, cols, w);
        const SubregionGraph g(w, tg.edges, tg.entrance, tg.destination);
        const auto p = max_weight_path(g);
        EXPECT_EQ(p.weight, widest(tg));
        expect_valid_path(tg, p);
        if (rows * cols <= 12) {
            EXPECT_EQ(p.weight, ref::enumerate_bottleneck(w, tg.adj, tg.is_entrance, tg.is_destination));
        }
    }
}

TEST(WorstPath, CollocatedPairAtCenter) {
    const RectField field(100, 100);
    const RadarSet radars({{50, 50}}, {{50, 50}});
    // Widest crossing hugs a side wall; its closest cell center is (0.125, 49.875).
    const double b_delta = 49.875 * 49.875 + 0.125 * 0.125;
    EXPECT_NEAR(brute_force_bottleneck(field, radars, 0.25), b_delta, 1e-9);
    const auto res = worst_case_path(field, radars, 1.0, 0.25);
    EXPECT_EQ(res.weight, 2487.0);
    EXPECT_LE(std::abs(res.weight - 2500.0), detectability_lipschitz(field, radars) * 0.25 + 1.0);
    ASSERT_FALSE(res.path.empty());
    EXPECT_DOUBLE_EQ(res.path.front().y, 100.0 - 0.125);
    EXPECT_DOUBLE_EQ(res.path.back().y, 0.125);
    for (std::size_t i = 1; i < res.path.size(); ++i) {
        EXPECT_NEAR(std::abs(res.path[i].x - res.path[i - 1].x) + std::abs(res.path[i].y - res.path[i - 1].y), 0.25,
                    1e-12);
    }
    for (const auto& p : res.path) EXPECT_GE(detectability(radars, p), res.weight);
}

TEST(WorstPath, SandwichAgainstBruteForce) {
    const RectField field(50, 50);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 rng(seed);
        const auto radars = random_radars(rng, 3, 5, 50, 50);
        const double eps = 1.0;
        const double b = brute_force_bottleneck(field, radars, 0.5);
        const auto res = worst_case_path(field, radars, eps, 0.5, 1);
        EXPECT_LT(b, res.weight + eps) << seed;
        EXPECT_LE(res.weight, b) << seed;
        // Between adjacent centers I can dip by at most Lip * delta / 2.
        const double lip = detectability_lipschitz(field, radars);
        EXPECT_GE(path_detectability(radars, res.path, 1e-3), res.weight - lip * 0.25) << seed;
    }
}

TEST(WorstPath, FinerEpsilonNeverLoosens) {
    const RectField field(40, 40);
    std::mt19937_64 rng(8);
    const auto radars = random_radars(rng, 2, 3, 40, 40);
    const double b = brute_force_bottleneck(field, radars, 0.5);
    double eps = 8.0;
    for (int i = 0; i < 6; ++i, eps /= 2) {
        const auto res = worst_case_path(field, radars, eps, 0.5, 1);
        EXPECT_LE(b - res.weight, eps);
        EXPECT_GE(b - res.weight, 0.0);
    }
}

TEST(WorstPath, AddingRadarNeverRaisesWeight) {
    const RectField field(50, 50);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto radars = random_radars(rng, 2, 3, 50, 50);
        const double base = worst_case_path(field, radars, 0.5, 0.5, 1).weight;
        const auto extra = ref::random_points(rng, 2, 50, 50);
        EXPECT_LE(worst_case_path(field, radars.with_transmitter(extra[0]), 0.5, 0.5, 1).weight, base);
        EXPECT_LE(worst_case_path(field, radars.with_receiver(extra[1]), 0.5, 0.5, 1).weight, base);
    }
}

TEST(WorstPath, GridRefinementStaysWithinLipschitzBand) {
    const RectField field(30, 30);
    std::mt19937_64 rng(4);
    const auto radars = random_radars(rng, 2, 2, 30, 30);
    const double lip = detectability_lipschitz(field, radars);
    const double fine = brute_force_bottleneck(field, radars, 0.125);
    for (double delta : {2.0, 1.0, 0.5, 0.25}) {
        const double b = brute_force_bottleneck(field, radars, delta);
        EXPECT_LE(std::abs(b - fine), lip * (delta + 0.125)) << delta;
        RecordProperty("B_delta_" + std::to_string(delta), std::to_string(b));
    }
}

TEST(WorstPath, DefaultDelta) {
    const RectField field(100, 100);
    const RadarSet radars({{10, 10}}, {{90, 90}});
    const double lip = detectability_lipschitz(field, radars);
    EXPECT_DOUBLE_EQ(default_delta(field, radars, 1000.0), std::min(1000.0 / (8 * lip), 100.0));
    EXPECT_DOUBLE_EQ(default_delta(field, radars, 1e-6), 0.1);
    EXPECT_THROW(default_delta(field, radars, 0.0), InputError);
    EXPECT_THROW(worst_case_path(field, radars, -1.0, 1.0), InputError);
}
