#include "cassini/intrusion.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <thread>

#include "cassini/error.hpp"

namespace cassini {

Point GridShape::center(std::size_t col, std::size_t row) const {
    return {(static_cast<double>(col) + 0.5) * cell_width, (static_cast<double>(row) + 0.5) * cell_height};
}

GridShape grid_shape(const RectField& field, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) throw InputError("cell size delta must be positive");
    if (delta > std::min(field.width, field.height) * (1.0 + 1e-12)) {
        throw InputError("cell size delta exceeds the smaller field dimension");
    }
    GridShape s;
    // Tolerate representation error so that e.g. 100 / 0.25 yields exactly 400 cells.
    s.nx = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(field.width / delta - 1e-9)));
    s.ny = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(field.height / delta - 1e-9)));
    s.cell_width = field.width / static_cast<double>(s.nx);
    s.cell_height = field.height / static_cast<double>(s.ny);
    if (s.nx > (1u << 15) || s.ny > (1u << 15)) throw InfeasibleError("grid exceeds 32768 cells per side");
    return s;
}

std::int64_t quantize_band(double value, double epsilon) {
    auto k = static_cast<std::int64_t>(std::floor(value / epsilon));
    // The division can round across an integer; settle on the exact band.
    while (k > 0 && static_cast<double>(k) * epsilon > value) --k;
    while (!(value < static_cast<double>(k) * epsilon + epsilon)) ++k;
    return k;
}

CellGrid build_grid(const RectField& field, const RadarSet& radars, double epsilon, double delta, unsigned threads) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InputError("epsilon must be positive");
    CellGrid grid;
    grid.field = field;
    grid.shape = grid_shape(field, delta);
    grid.epsilon = epsilon;
    const std::size_t n = grid.shape.size();
    grid.nearest_transmitter.resize(n);
    grid.nearest_receiver.resize(n);
    grid.detectability.resize(n);
    grid.band.resize(n);

    auto fill_rows = [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t row = row_begin; row < row_end; ++row) {
            for (std::size_t col = 0; col < grid.shape.nx; ++col) {
                const std::size_t idx = grid.shape.index(col, row);
                const auto pair = nearest_pair(radars, grid.shape.center(col, row));
                grid.nearest_transmitter[idx] = static_cast<std::uint32_t>(pair.transmitter);
                grid.nearest_receiver[idx] = static_cast<std::uint32_t>(pair.receiver);
                grid.detectability[idx] = pair.product();
                grid.band[idx] = quantize_band(grid.detectability[idx], epsilon);
            }
        }
    };

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.shape.ny));
    if (workers <= 1) {
        fill_rows(0, grid.shape.ny);
        return grid;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.shape.ny + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(grid.shape.ny, begin + chunk);
        if (begin < end) pool.emplace_back(fill_rows, begin, end);
    }
    for (auto& t : pool) t.join();
    return grid;
}

SubregionGraph::SubregionGraph(std::vector<double> weights,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                               const std::vector<std::size_t>& entrance, const std::vector<std::size_t>& destination)
    : weights_(std::move(weights)) {
    const std::size_t n = weights_.size();
    if (n + 2 > std::numeric_limits<std::uint32_t>::max()) throw InfeasibleError("graph too large");
    for (double w : weights_) {
        if (std::isnan(w)) throw InputError("vertex weights must not be NaN");
    }
    const std::size_t s = n;
    const std::size_t t = n + 1;
    weights_.push_back(kVirtualWeight);
    weights_.push_back(kVirtualWeight);

    std::vector<std::pair<std::size_t, std::size_t>> all;
    all.reserve(edges.size() + entrance.size() + destination.size());
    for (const auto& [a, b] : edges) {
        if (a >= n || b >= n) throw InputError("edge references an unknown vertex");
        all.emplace_back(a, b);
    }
    for (std::size_t v : entrance) {
        if (v >= n) throw InputError("entrance references an unknown vertex");
        all.emplace_back(s, v);
    }
    for (std::size_t v : destination) {
        if (v >= n) throw InputError("destination references an unknown vertex");
        all.emplace_back(t, v);
    }

    offsets_.assign(n + 3, 0);
    for (const auto& [a, b] : all) {
        ++offsets_[a + 1];
        ++offsets_[b + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    neighbors_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [a, b] : all) {
        neighbors_[fill[a]++] = static_cast<std::uint32_t>(b);
        neighbors_[fill[b]++] = static_cast<std::uint32_t>(a);
    }
}

SubregionGraph grid_graph(const CellGrid& grid) {
    const auto& shape = grid.shape;
    std::vector<double> weights(shape.size());
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = grid.weight(i);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(2 * shape.size());
    for (std::size_t row = 0; row < shape.ny; ++row) {
        for (std::size_t col = 0; col < shape.nx; ++col) {
            const std::size_t v = shape.index(col, row);
            if (col + 1 < shape.nx) edges.emplace_back(v, shape.index(col + 1, row));
            if (row + 1 < shape.ny) edges.emplace_back(v, shape.index(col, row + 1));
        }
    }
    std::vector<std::size_t> entrance;
    std::vector<std::size_t> destination;
    for (std::size_t col = 0; col < shape.nx; ++col) {
        entrance.push_back(shape.index(col, shape.ny - 1));
        destination.push_back(shape.index(col, 0));
    }
    return SubregionGraph(std::move(weights), edges, entrance, destination);
}

namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

// BFS from s over vertices with weight >= threshold. Fills parent links when requested.
bool reaches_sink(const SubregionGraph& g, double threshold, std::vector<std::size_t>* parent) {
    std::vector<std::size_t> local;
    auto& par = parent ? *parent : local;
    par.assign(g.vertex_count(), kUnvisited);
    std::queue<std::size_t> frontier;
    frontier.push(g.source());
    par[g.source()] = g.source();
    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        if (u == g.sink()) return true;
        g.for_each_neighbor(u, [&](std::size_t v) {
            if (par[v] == kUnvisited && g.weight(v) >= threshold) {
                par[v] = u;
                frontier.push(v);
            }
        });
    }
    return false;
}

}  // namespace

GraphPath max_weight_path(const SubregionGraph& graph) {
    std::vector<double> levels;
    levels.reserve(graph.regular_count());
    for (std::size_t v = 0; v < graph.regular_count(); ++v) levels.push_back(graph.weight(v));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<std::size_t> parent;
    // A direct s-t edge never exists, so at least one regular vertex is needed.
    if (levels.empty() || !reaches_sink(graph, levels.front(), nullptr)) {
        throw InfeasibleError("entrance and destination are disconnected");
    }
    std::size_t lo = 0;  // feasible
    std::size_t hi = levels.size();  // first index known infeasible
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (reaches_sink(graph, levels[mid], nullptr)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    reaches_sink(graph, levels[lo], &parent);

    GraphPath out;
    out.weight = SubregionGraph::kVirtualWeight;
    for (std::size_t v = parent[graph.sink()]; v != graph.source(); v = parent[v]) {
        out.vertices.push_back(v);
        out.weight = std::min(out.weight, graph.weight(v));
    }
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

double default_delta(const RectField& field, const RadarSet& radars, double epsilon) {
    if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
    const double lip = detectability_lipschitz(field, radars);
    const double floor_delta = 1e-3 * std::min(field.width, field.height);
    return std::min(std::max(epsilon / (8.0 * lip), floor_delta), std::min(field.width, field.height));
}

PathResult worst_case_path(const RectField& field, const RadarSet& radars, double epsilon,
                           std::optional<double> delta, unsigned threads) {
    const double d = delta.value_or(default_delta(field, radars, epsilon));
    const auto grid = build_grid(field, radars, epsilon, d, threads);
    const auto graph = grid_graph(grid);
    const auto best = max_weight_path(graph);

    PathResult out;
    out.weight = best.weight;
    out.path.reserve(best.vertices.size());
    for (std::size_t v : best.vertices) out.path.push_back(grid.shape.center(v));
    return out;
}

double brute_force_bottleneck(const RectField& field, const RadarSet& radars, double delta) {
    const auto shape = grid_shape(field, delta);
    std::vector<double> value(shape.size());
    for (std::size_t idx = 0; idx < shape.size(); ++idx) {
        const Point p = shape.center(idx);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& t : radars.transmitters()) {
            for (const auto& r : radars.receivers()) best = std::min(best, distance_product(t, r, p));
        }
        value[idx] = best;
    }

    // Widest path: settle cells in order of decreasing bottleneck from the entrance row.
    std::vector<double> width(shape.size(), -1.0);
    std::vector<bool> settled(shape.size(), false);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item> heap;
    for (std::size_t col = 0; col < shape.nx; ++col) {
        const std::size_t v = shape.index(col, shape.ny - 1);
        width[v] = value[v];
        heap.emplace(width[v], v);
    }
    while (!heap.empty()) {
        const auto [w, u] = heap.top();
        heap.pop();
        if (settled[u]) continue;
        settled[u] = true;
        const std::size_t col = u % shape.nx;
        const std::size_t row = u / shape.nx;
        if (row == 0) return w;  // first destination cell settled carries the maximum bottleneck
        auto relax = [&](std::size_t v) {
            const double cand = std::min(w, value[v]);
            if (!settled[v] && cand > width[v]) {
                width[v] = cand;
                heap.emplace(cand, v);
            }
        };
        if (col > 0) relax(u - 1);
        if (col + 1 < shape.nx) relax(u + 1);
        relax(u - shape.nx);
        if (row + 1 < shape.ny) relax(u + shape.nx);
    }
    return 0.0;  // unreachable: the grid is connected
}

}  // namespace cassini
