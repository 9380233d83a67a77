#include "cassini/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "cassini/error.hpp"
#include "cassini/line_vulnerability.hpp"

namespace cassini {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ (stream * 0xd1b54a32d192ed03ULL));
}

double q_of(const LineDeployment& dep) { return vulnerability(dep).q; }

LineDeployment from_spacings(const Order& order, double h, const std::vector<double>& gaps) {
    LineDeployment dep;
    dep.h = h;
    dep.order = order;
    dep.positions.resize(order.size());
    double x = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        x += gaps[i];
        dep.positions[i] = std::min(x, h);
    }
    return dep;
}

// Every witness value of the deployment built from the spacings.
void witness_values(const Order& order, double h, const std::vector<double>& gaps, std::vector<double>& out) {
    const auto rep = vulnerability(from_spacings(order, h, gaps));
    out.clear();
    for (const auto& w : rep.witnesses) out.push_back(w.value);
}

// Euclidean projection onto {g >= 0, sum g = h}.
void project_simplex(std::vector<double>& v, double h) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double css = 0.0;
    double theta = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        css += u[i];
        const double t = (css - h) / static_cast<double>(i + 1);
        if (u[i] - t > 0.0) theta = t;
    }
    for (double& x : v) x = std::max(x - theta, 0.0);
}

// Minimizes max over witnesses by projected gradient on the log-sum-exp
// surrogate tau * log(sum exp(w / tau)), shrinking tau toward the true max.
double descend_gaps(const Order& order, double h, std::vector<double> gaps) {
    const std::size_t k = gaps.size();
    std::vector<double> w;
    auto smooth = [&](const std::vector<double>& g, double tau) {
        witness_values(order, h, g, w);
        const double top = *std::max_element(w.begin(), w.end());
        double acc = 0.0;
        for (double v : w) acc += std::exp((v - top) / tau);
        return top + tau * std::log(acc);
    };
    witness_values(order, h, gaps, w);
    const double start = *std::max_element(w.begin(), w.end());
    std::vector<double> grad(k);
    std::vector<double> probe(k);
    std::vector<double> next(k);
    double lr = 0.1 * h / static_cast<double>(k);
    for (double tau = 0.05 * start; tau > 1e-10 * start; tau *= 0.2) {
        for (int it = 0; it < 400; ++it) {
            const double f = smooth(gaps, tau);
            const double e = 1e-7 * h;
            double mean = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                probe = gaps;
                probe[i] += e;
                mean += (grad[i] = (smooth(probe, tau) - f) / e);
            }
            mean /= static_cast<double>(k);
            for (double& g : grad) g -= mean;
            bool moved = false;
            while (lr > 1e-15 * h) {
                for (std::size_t i = 0; i < k; ++i) next[i] = gaps[i] - lr * grad[i];
                project_simplex(next, h);
                const double fn = smooth(next, tau);
                if (fn < f) {
                    moved = f - fn > 1e-14 * f;
                    gaps.swap(next);
                    lr *= 1.5;
                    break;
                }
                lr *= 0.5;
            }
            if (!moved) break;
        }
        lr = std::max(lr, 1e-6 * h);
    }
    witness_values(order, h, gaps, w);
    return *std::max_element(w.begin(), w.end());
}

}  // namespace

double descend_order(const Order& order, double h, std::size_t restarts, std::uint64_t seed) {
    if (!(h > 0.0)) throw InputError("barrier length h must be positive");
    if (order.empty()) throw InputError("order must not be empty");
    const std::size_t k = order.size() + 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r <= restarts; ++r) {
        std::mt19937_64 rng(derive_seed(seed, r));
        std::vector<double> gaps(k);
        if (r == 0) {
            // Uniform nodes: half-gaps at both ends.
            const double unit = h / static_cast<double>(k - 1);
            std::fill(gaps.begin(), gaps.end(), unit);
            gaps.front() = gaps.back() = unit / 2;
        } else {
            std::exponential_distribution<double> e(1.0);
            double total = 0.0;
            for (double& g : gaps) total += (g = e(rng));
            for (double& g : gaps) g *= h / total;
        }
        best = std::min(best, descend_gaps(order, h, std::move(gaps)));
    }
    return best;
}

ExhaustiveResult exhaustive_plan(std::size_t m, std::size_t n, double h, std::uint64_t seed) {
    if (m < 1 || n < 1) throw InputError("exhaustive search needs at least one transmitter and one receiver");
    if (m + n > kExhaustiveNodeCap) {
        throw InfeasibleError("exhaustive search is capped at " + std::to_string(kExhaustiveNodeCap) + " nodes");
    }
    Order order(m, NodeKind::Transmitter);
    order.insert(order.end(), n, NodeKind::Receiver);  // Transmitter < Receiver, so this is the first permutation

    struct Scored {
        Order order;
        double c;
        bool candidate;
    };
    std::vector<Scored> scored;
    std::uint64_t stream = 0;
    do {
        const bool candidate = is_candidate_order(order);
        const double c = candidate ? solve_c_for_length(order, h).c : descend_order(order, h, 20, derive_seed(seed, stream));
        scored.push_back({order, c, candidate});
        ++stream;
    } while (std::next_permutation(order.begin(), order.end()));

    ExhaustiveResult out;
    out.orders_examined = scored.size();
    const Scored* best = nullptr;
    for (const auto& s : scored) {
        if (s.candidate) ++out.candidate_orders;
        // Candidates win exact ties: their value is exact rather than a descent bound.
        if (!best || s.c < best->c || (s.c == best->c && s.candidate && !best->candidate)) best = &s;
    }
    out.best_order = best->order;
    out.best_c = best->c;
    out.best_is_candidate = best->candidate;
    for (const auto& s : scored) {
        if (&s != best && s.c <= best->c * (1.0 + 1e-9)) out.ties.push_back(s.order);
    }
    return out;
}

PerturbationOutcome perturbation_check(const LineDeployment& dep, std::size_t trials, std::uint64_t seed) {
    dep.validate();
    PerturbationOutcome out;
    out.reference = q_of(dep);
    out.min_observed = out.reference;
    out.trials = trials;

    const std::size_t j = dep.positions.size();
    std::vector<double> scale(j, 0.0);
    for (std::size_t i = 0; i < j; ++i) {
        const double left = dep.positions[i] - (i == 0 ? 0.0 : dep.positions[i - 1]);
        const double right = (i + 1 == j ? dep.h : dep.positions[i + 1]) - dep.positions[i];
        double gap = std::numeric_limits<double>::infinity();
        if (left > 0.0) gap = std::min(gap, left);
        if (right > 0.0) gap = std::min(gap, right);
        scale[i] = std::isfinite(gap) ? 0.05 * gap : 0.0;
    }

    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(derive_seed(seed, t));
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> tx;
        std::vector<double> rx;
        for (std::size_t i = 0; i < j; ++i) {
            const double p = std::clamp(dep.positions[i] + scale[i] * u(rng), 0.0, dep.h);
            (dep.order[i] == NodeKind::Transmitter ? tx : rx).push_back(p);
        }
        const double q = q_of(deployment_from_positions(dep.h, tx, rx));
        out.min_observed = std::min(out.min_observed, q);
        if (q < out.reference - 1e-9) out.holds = false;
    }
    return out;
}

}  // namespace cassini
