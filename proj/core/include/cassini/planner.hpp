#pragma once

#include <cstddef>
#include <vector>

#include "cassini/order.hpp"
#include "cassini/spacing.hpp"

namespace cassini {

/// Receiver counts (n_{H_l T_1}, n_{T_1 T_2}, ..., n_{T_M H_r}).
struct GapVector {
    std::vector<std::size_t> counts;

    std::size_t transmitters() const { return counts.empty() ? 0 : counts.size() - 1; }
    std::size_t receivers() const;
    friend bool operator==(const GapVector&, const GapVector&) = default;
};

/// Balanced gap vector from the quotient q and remainder r of N / M.
/// Requires 1 <= M <= N.
GapVector optimal_gap_vector(std::size_t m, std::size_t n);

/// R^{n_0} T R^{n_1} T ... T R^{n_M}.
Order expand_gap_vector(const GapVector& gaps);
/// Inverse of expand_gap_vector for orders listing transmitters as T.
GapVector gap_vector_of(const Order& order);

/// Optimal order for M transmitters and N receivers. When M > N the roles are
/// swapped, planned, and swapped back.
Order optimal_order(std::size_t m, std::size_t n);

struct PlanResult {
    LineDeployment deployment;
    /// Minimized vulnerability Q(H).
    double c = 0.0;
};

PlanResult plan(std::size_t m, std::size_t n, double h);

/// Uniform transmitters and uniform receivers, placed independently.
LineDeployment heu1(std::size_t m, std::size_t n, double h);
/// Optimal order with all J = M + N nodes uniformly spaced.
LineDeployment heu2(std::size_t m, std::size_t n, double h);

}  // namespace cassini
