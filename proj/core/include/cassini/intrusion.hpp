#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "cassini/geometry.hpp"

namespace cassini {

/// Uniform rasterization of a field: nx = ceil(width / delta) columns and
/// ny = ceil(height / delta) rows of equal cells. Row 0 touches the
/// destination edge (y = 0), row ny - 1 the entrance (y = height).
struct GridShape {
    std::size_t nx = 0;
    std::size_t ny = 0;
    double cell_width = 0.0;
    double cell_height = 0.0;

    std::size_t size() const { return nx * ny; }
    std::size_t index(std::size_t col, std::size_t row) const { return row * nx + col; }
    Point center(std::size_t col, std::size_t row) const;
    Point center(std::size_t idx) const { return center(idx % nx, idx / nx); }
};

/// Throws InputError unless 0 < delta <= min(width, height).
GridShape grid_shape(const RectField& field, double delta);

/// Per-cell 2-site Voronoi assignment and epsilon-band quantization, evaluated at cell centers.
struct CellGrid {
    RectField field;
    GridShape shape;
    double epsilon = 0.0;
    std::vector<std::uint32_t> nearest_transmitter;
    std::vector<std::uint32_t> nearest_receiver;
    std::vector<double> detectability;
    /// band[i] = floor(detectability[i] / epsilon), corrected so that
    /// w <= I < w + epsilon holds in floating point for w = band * epsilon.
    std::vector<std::int64_t> band;

    double weight(std::size_t idx) const { return static_cast<double>(band[idx]) * epsilon; }
};

/// Largest band k with k * epsilon <= value < k * epsilon + epsilon.
std::int64_t quantize_band(double value, double epsilon);

/// threads = 0 picks std::thread::hardware_concurrency().
CellGrid build_grid(const RectField& field, const RadarSet& radars, double epsilon, double delta,
                    unsigned threads = 0);

/// Vertex-weighted undirected graph with virtual entrance (s) and destination
/// (t) vertices of infinite weight. Regular vertices are 0..n-1, s = n, t = n + 1.
class SubregionGraph {
public:
    static constexpr double kVirtualWeight = std::numeric_limits<double>::infinity();

    SubregionGraph(std::vector<double> weights, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                   const std::vector<std::size_t>& entrance, const std::vector<std::size_t>& destination);

    std::size_t regular_count() const { return weights_.size() - 2; }
    std::size_t vertex_count() const { return weights_.size(); }
    std::size_t source() const { return weights_.size() - 2; }
    std::size_t sink() const { return weights_.size() - 1; }
    double weight(std::size_t v) const { return weights_[v]; }

    template <typename F>
    void for_each_neighbor(std::size_t v, F&& f) const {
        for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) f(static_cast<std::size_t>(neighbors_[e]));
    }

private:
    std::vector<double> weights_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> neighbors_;
};

/// 4-connected graph over the cells; top-row cells attach to s, bottom-row cells to t.
SubregionGraph grid_graph(const CellGrid& grid);

struct GraphPath {
    /// min of vertex weights along the path, s and t excluded.
    double weight = 0.0;
    /// Regular vertices from the s side to the t side.
    std::vector<std::size_t> vertices;
};

/// Bottleneck (max-min) s-t path: binary search over the sorted distinct
/// vertex weights, each level checked by a BFS restricted to vertices at or
/// above it. Throws InfeasibleError if s and t are disconnected.
GraphPath max_weight_path(const SubregionGraph& graph);

struct PathResult {
    double weight = 0.0;
    std::vector<Point> path;
};

/// delta = epsilon / (8 Lip), but never below 1e-3 * min(width, height).
double default_delta(const RectField& field, const RadarSet& radars, double epsilon);

/// Approximate worst-case intrusion path: build_grid then max_weight_path.
/// At grid resolution B_delta - epsilon < W <= B_delta.
PathResult worst_case_path(const RectField& field, const RadarSet& radars, double epsilon,
                           std::optional<double> delta = std::nullopt, unsigned threads = 0);

/// Unquantized max-min over the same cells by widest-path best-first search,
/// with I evaluated by explicit pairwise minimization. Equals B_delta.
double brute_force_bottleneck(const RectField& field, const RadarSet& radars, double delta);

}  // namespace cassini
