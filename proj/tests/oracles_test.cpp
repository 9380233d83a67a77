#include <gtest/gtest.h>

#include "cassini/error.hpp"
#include "cassini/line_vulnerability.hpp"
#include "cassini/oracles.hpp"
#include "cassini/planner.hpp"
#include "support/oracles.hpp"

using namespace cassini;

TEST(Exhaustive, MinimalCase) {
    const auto r = exhaustive_plan(1, 1, 10.0);
    EXPECT_NEAR(r.best_c, 12.5, 1e-9);
    EXPECT_TRUE(r.best_is_candidate);
    EXPECT_EQ(r.orders_examined, 2u);
    EXPECT_EQ(r.candidate_orders, 2u);
    EXPECT_EQ(r.ties.size(), 1u);
}

TEST(Exhaustive, TwoByTwoPicksBalancedGapFamily) {
    const auto r = exhaustive_plan(2, 2, 20.0);
    const auto g = gap_vector_of(r.best_order);
    const bool family = g.counts == std::vector<std::size_t>{1, 1, 0} || g.counts == std::vector<std::size_t>{0, 1, 1};
    EXPECT_TRUE(family) << format_order(r.best_order);
    EXPECT_LE(ref::rel_diff(r.best_c, plan(2, 2, 20.0).c), 1e-9);
    EXPECT_EQ(r.orders_examined, 6u);
}

TEST(Exhaustive, NeverBeatsPlanOnSmallCases) {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; m + n <= 5; ++n) {
            const auto r = exhaustive_plan(m, n, 20.0);
            EXPECT_GE(r.best_c, plan(m, n, 20.0).c - 1e-6) << m << "," << n;
        }
    }
}

TEST(Exhaustive, NodeCap) {
    EXPECT_THROW(exhaustive_plan(5, 4, 20.0), InfeasibleError);
    EXPECT_THROW(exhaustive_plan(0, 4, 20.0), InputError);
}

TEST(Exhaustive, DescentReachesBalancedLevelOnCandidate) {
    const Order o = parse_order("RTRRTR");
    const double exact = solve_c_for_length(o, 20.0).c;
    const double found = descend_order(o, 20.0, 10, 3);
    EXPECT_GE(found, exact - 1e-6);
    EXPECT_LE(found, exact * (1 + 1e-6));
}

TEST(Perturbation, OptimumHolds) {
    const auto p = plan(1, 1, 10.0);
    const auto out = perturbation_check(p.deployment, 1000, 42);
    EXPECT_TRUE(out.holds);
    EXPECT_EQ(out.trials, 1000u);
    EXPECT_NEAR(out.reference, 12.5, 1e-9);
    EXPECT_GE(out.min_observed, out.reference - 1e-9);
}

TEST(Perturbation, PlanHoldsOnLargerLayouts) {
    for (auto [m, n] : {std::pair{3u, 8u}, std::pair{2u, 5u}, std::pair{4u, 4u}}) {
        EXPECT_TRUE(perturbation_check(plan(m, n, 100.0).deployment, 300, 9).holds) << m << "," << n;
    }
}

TEST(Perturbation, UniformHeuristicIsImprovable) {
    const auto out = perturbation_check(heu1(1, 1, 10.0), 1000, 42);
    EXPECT_FALSE(out.holds);
    EXPECT_DOUBLE_EQ(out.reference, 25.0);
    EXPECT_LT(out.min_observed, 25.0);
}

TEST(Perturbation, ZeroTrialsAndDeterminism) {
    const auto dep = heu2(2, 3, 30.0);
    const auto none = perturbation_check(dep, 0, 1);
    EXPECT_TRUE(none.holds);
    EXPECT_DOUBLE_EQ(none.min_observed, vulnerability(dep).q);
    const auto a = perturbation_check(dep, 200, 77);
    const auto b = perturbation_check(dep, 200, 77);
    EXPECT_EQ(a.holds, b.holds);
    EXPECT_EQ(a.min_observed, b.min_observed);
}

TEST(Exhaustive, DescentMatchesExactOnEveryShortCandidate) {
    for (std::size_t len = 2; len <= 8; ++len) {
        for (std::size_t bits = 0; bits < (1u << len); ++bits) {
            Order o(len);
            for (std::size_t i = 0; i < len; ++i) o[i] = (bits >> i) & 1 ? NodeKind::Transmitter : NodeKind::Receiver;
            if (!is_candidate_order(o)) continue;
            const double exact = solve_c_for_length(o, 20.0).c;
            const double found = descend_order(o, 20.0, 5, bits);
            EXPECT_GE(found, exact * (1 - 1e-9)) << format_order(o);
            EXPECT_LE(found, exact * (1 + 1e-5)) << format_order(o);
        }
    }
}
