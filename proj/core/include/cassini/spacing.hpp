#pragma once

#include <cstddef>
#include <vector>

#include "cassini/order.hpp"

namespace cassini {

/// e_0(c), ..., e_k(c): e_0 = 2 sqrt(c) and e_j is the positive root of
/// (E + x/2)(x/2) = c with E = e_0 + ... + e_{j-1}.
struct SpacingLadder {
    double c = 0.0;
    std::vector<double> values;

    double operator[](std::size_t j) const { return values.at(j); }
};

SpacingLadder ladder(double c, std::size_t k);

/// Ordered placement on a barrier [0, h].
struct LineDeployment {
    double h = 0.0;
    Order order;
    std::vector<double> positions;

    /// Throws InputError unless positions are sorted, inside [0, h], match the
    /// order length, and both kinds are present.
    void validate() const;
    std::vector<double> positions_of(NodeKind kind) const;
    /// Distances between consecutive padded nodes, J + 1 entries.
    std::vector<double> spacings() const;
    LineDeployment mirrored() const;
};

/// Builds a deployment from node kinds at arbitrary coordinates (sorted here;
/// transmitters precede receivers at equal coordinates).
LineDeployment deployment_from_positions(double h, const std::vector<double>& transmitters,
                                         const std::vector<double>& receivers);

/// Left-to-right spacings that make every local vulnerable value of the zone equal c.
std::vector<double> balanced_spacings(const LocalSuborder& sub, double c);

/// The J + 1 balanced spacings of a candidate order at level c. Where two end
/// zones overlap, each spacing is taken from the first zone that defines it.
std::vector<double> balanced_order_spacings(const Order& order, double c);

/// Barrier length ||H_l H_r|| of the balanced solution at level c.
double total_length(const Order& order, double c);

struct BalancedSolution {
    double c = 0.0;
    LineDeployment deployment;
};

/// Bisects c until the balanced length equals h. The bracket
/// [(h / (2 (J + 1)))^2, (h / 2)^2] always contains the root.
BalancedSolution solve_c_for_length(const Order& order, double h);

}  // namespace cassini
