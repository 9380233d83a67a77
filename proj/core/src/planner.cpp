#include "cassini/planner.hpp"

#include <numeric>
#include <string>

#include "cassini/error.hpp"

namespace cassini {

std::size_t GapVector::receivers() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

GapVector optimal_gap_vector(std::size_t m, std::size_t n) {
    if (m < 1) throw InputError("optimal_gap_vector needs M >= 1");
    if (n < m) throw InputError("optimal_gap_vector needs N >= M; swap roles first");
    const std::size_t q = n / m;
    const std::size_t r = n % m;

    GapVector g;
    auto& v = g.counts;
    v.reserve(m + 1);
    if (q % 2 == 0) {
        v.push_back(q / 2);
        v.insert(v.end(), r, q + 1);
        v.insert(v.end(), m - 1 - r, q);
        v.push_back(q / 2);
    } else if (r == 0) {
        v.push_back((q + 1) / 2);
        v.insert(v.end(), m - 1, q);
        v.push_back((q - 1) / 2);
    } else {
        v.push_back((q + 1) / 2);
        v.insert(v.end(), r - 1, q + 1);
        v.insert(v.end(), m - r, q);
        v.push_back((q + 1) / 2);
    }
    return g;
}

Order expand_gap_vector(const GapVector& gaps) {
    Order order;
    for (std::size_t i = 0; i < gaps.counts.size(); ++i) {
        order.insert(order.end(), gaps.counts[i], NodeKind::Receiver);
        if (i + 1 < gaps.counts.size()) order.push_back(NodeKind::Transmitter);
    }
    return order;
}

GapVector gap_vector_of(const Order& order) {
    GapVector g;
    g.counts.push_back(0);
    for (NodeKind k : order) {
        if (k == NodeKind::Transmitter) {
            g.counts.push_back(0);
        } else {
            ++g.counts.back();
        }
    }
    return g;
}

Order optimal_order(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw InputError("planning needs at least one transmitter and one receiver");
    if (m > n) return flipped(expand_gap_vector(optimal_gap_vector(n, m)));
    return expand_gap_vector(optimal_gap_vector(m, n));
}

PlanResult plan(std::size_t m, std::size_t n, double h) {
    auto solution = solve_c_for_length(optimal_order(m, n), h);
    return {std::move(solution.deployment), solution.c};
}

namespace {

std::vector<double> uniform_positions(std::size_t count, double h) {
    std::vector<double> out;
    out.reserve(count);
    const double denom = 2.0 * static_cast<double>(count);
    for (std::size_t i = 1; i <= count; ++i) out.push_back(h * (2.0 * static_cast<double>(i) - 1.0) / denom);
    return out;
}

void check_sizes(std::size_t m, std::size_t n, double h) {
    if (m < 1 || n < 1) throw InputError("deployment needs at least one transmitter and one receiver");
    if (!(h > 0.0)) throw InputError("barrier length h must be positive");
}

}  // namespace

LineDeployment heu1(std::size_t m, std::size_t n, double h) {
    check_sizes(m, n, h);
    return deployment_from_positions(h, uniform_positions(m, h), uniform_positions(n, h));
}

LineDeployment heu2(std::size_t m, std::size_t n, double h) {
    check_sizes(m, n, h);
    LineDeployment dep;
    dep.h = h;
    dep.order = optimal_order(m, n);
    dep.positions = uniform_positions(m + n, h);
    return dep;
}

}  // namespace cassini
