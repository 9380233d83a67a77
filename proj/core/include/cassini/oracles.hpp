#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cassini/order.hpp"
#include "cassini/spacing.hpp"

namespace cassini {

struct ExhaustiveResult {
    Order best_order;
    double best_c = 0.0;
    bool best_is_candidate = true;
    /// Other orders whose value lies within 1e-9 relative of best_c.
    std::vector<Order> ties;
    std::size_t orders_examined = 0;
    std::size_t candidate_orders = 0;
};

inline constexpr std::size_t kExhaustiveNodeCap = 8;

/// Every arrangement of M T's and N R's: exact balanced solutions for candidate
/// orders, restarted smooth descent over spacings for the others.
/// Throws InfeasibleError when M + N exceeds kExhaustiveNodeCap.
ExhaustiveResult exhaustive_plan(std::size_t m, std::size_t n, double h, std::uint64_t seed = 1);

/// Best-effort Q for a fixed order: projected gradient over the spacings on
/// an annealed log-sum-exp of the witness values, run from uniform nodes and
/// from `restarts` random placements.
double descend_order(const Order& order, double h, std::size_t restarts, std::uint64_t seed);

struct PerturbationOutcome {
    bool holds = true;
    double reference = 0.0;
    /// Smallest vulnerability seen across all trials.
    double min_observed = 0.0;
    std::size_t trials = 0;
};

/// Jitters every node uniformly within +-5% of its nearest positive gap
/// (clipped to [0, h]) and checks that no trial drops the vulnerability below
/// the deployment's own Q by more than 1e-9. Trial t draws from a generator
/// seeded by a hash of (seed, t).
PerturbationOutcome perturbation_check(const LineDeployment& dep, std::size_t trials, std::uint64_t seed);

}  // namespace cassini
