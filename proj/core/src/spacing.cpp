#include "cassini/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "cassini/error.hpp"

namespace cassini {

SpacingLadder ladder(double c, std::size_t k) {
    if (!(c > 0.0) || !std::isfinite(c)) throw InputError("ladder level c must be positive and finite");
    SpacingLadder out;
    out.c = c;
    out.values.reserve(k + 1);
    out.values.push_back(2.0 * std::sqrt(c));
    double prefix = out.values.front();
    for (std::size_t j = 1; j <= k; ++j) {
        // Positive root of x^2/4 + E x/2 - c = 0, written to avoid cancellation for E^2 >> c.
        const double x = 4.0 * c / (prefix + std::sqrt(prefix * prefix + 4.0 * c));
        out.values.push_back(x);
        prefix += x;
    }
    return out;
}

void LineDeployment::validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) throw InputError("barrier length h must be positive");
    if (order.size() != positions.size()) throw InputError("order and positions differ in length");
    if (count_kind(order, NodeKind::Transmitter) == 0 || count_kind(order, NodeKind::Receiver) == 0) {
        throw InputError("deployment needs at least one transmitter and one receiver");
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const double p = positions[i];
        if (!std::isfinite(p) || p < 0.0 || p > h) {
            throw InputError("position " + std::to_string(i) + " lies outside [0, h]");
        }
        if (i > 0 && p < positions[i - 1]) throw InputError("positions must be sorted ascending");
    }
}

std::vector<double> LineDeployment::positions_of(NodeKind kind) const {
    std::vector<double> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] == kind) out.push_back(positions[i]);
    }
    return out;
}

std::vector<double> LineDeployment::spacings() const {
    std::vector<double> out;
    out.reserve(positions.size() + 1);
    double prev = 0.0;
    for (double p : positions) {
        out.push_back(p - prev);
        prev = p;
    }
    out.push_back(h - prev);
    return out;
}

LineDeployment LineDeployment::mirrored() const {
    LineDeployment out;
    out.h = h;
    out.order.assign(order.rbegin(), order.rend());
    out.positions.reserve(positions.size());
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) out.positions.push_back(h - *it);
    return out;
}

LineDeployment deployment_from_positions(double h, const std::vector<double>& transmitters,
                                         const std::vector<double>& receivers) {
    std::vector<std::pair<double, NodeKind>> nodes;
    for (double t : transmitters) nodes.emplace_back(t, NodeKind::Transmitter);
    for (double r : receivers) nodes.emplace_back(r, NodeKind::Receiver);
    std::stable_sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    LineDeployment dep;
    dep.h = h;
    for (const auto& [p, k] : nodes) {
        dep.positions.push_back(p);
        dep.order.push_back(k);
    }
    dep.validate();
    return dep;
}

std::vector<double> balanced_spacings(const LocalSuborder& sub, double c) {
    validate_suborder(sub);
    const std::size_t k = sub.k;
    const auto e = ladder(c, std::max<std::size_t>(k, 1)).values;
    std::vector<double> out;
    switch (sub.pattern) {
        case Pattern::Pair:
            out.push_back(e[0]);
            break;
        case Pattern::EndRight:
            // (X, Y^k, H_r): e_0, ..., e_{k-1}, e_k / 2
            out.assign(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k));
            out.push_back(e[k] / 2.0);
            break;
        case Pattern::EndLeft:
            out.push_back(e[k] / 2.0);
            for (std::size_t j = k; j-- > 0;) out.push_back(e[j]);
            break;
        case Pattern::Interior: {
            // even k: e_0..e_{k/2-1}, e_{k/2}, e_{k/2-1}..e_0
            // odd k:  e_0..e_{(k-1)/2}, e_{(k-1)/2}..e_0
            const std::size_t half = k / 2;
            out.assign(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(half));
            out.push_back(e[half]);
            if (k % 2 == 1) out.push_back(e[half]);
            for (std::size_t j = half; j-- > 0;) out.push_back(e[j]);
            break;
        }
    }
    return out;
}

std::vector<double> balanced_order_spacings(const Order& order, double c) {
    const auto decomposition = decompose(order);
    std::vector<std::optional<double>> slots(order.size() + 1);
    for (const auto& sub : decomposition.suborders) {
        const auto local = balanced_spacings(sub, c);
        for (std::size_t i = 0; i < local.size(); ++i) {
            auto& slot = slots[sub.first_spacing() + i];
            if (!slot) slot = local[i];
        }
    }
    std::vector<double> out;
    out.reserve(slots.size());
    for (const auto& s : slots) {
        if (!s) throw InputError("decomposition left a spacing uncovered");  // unreachable for candidate orders
        out.push_back(*s);
    }
    return out;
}

double total_length(const Order& order, double c) {
    if (c == 0.0) return 0.0;
    const auto s = balanced_order_spacings(order, c);
    return std::accumulate(s.begin(), s.end(), 0.0);
}

BalancedSolution solve_c_for_length(const Order& order, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw InputError("barrier length h must be positive");
    if (!is_candidate_order(order)) {
        throw InputError("order '" + format_order(order) + "' is not a candidate order");
    }
    const double nodes = static_cast<double>(order.size());
    double lo = std::pow(h / (2.0 * (nodes + 1.0)), 2);
    double hi = std::pow(h / 2.0, 2);
    // Bisect until the bracket collapses to adjacent doubles.
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (total_length(order, mid) > h) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const double c = std::abs(total_length(order, lo) - h) <= std::abs(total_length(order, hi) - h) ? lo : hi;

    BalancedSolution out;
    out.c = c;
    out.deployment.h = h;
    out.deployment.order = order;
    const auto s = balanced_order_spacings(order, c);
    double x = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        x += s[i];
        out.deployment.positions.push_back(std::clamp(x, 0.0, h));
    }
    return out;
}

}  // namespace cassini
