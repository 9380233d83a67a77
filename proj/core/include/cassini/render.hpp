#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cassini/geometry.hpp"

namespace cassini {

struct Segment {
    Point a;
    Point b;
};

struct Bounds {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 1.0;
    double y_max = 1.0;
};

/// Marching squares over the network detectability I on an nx by ny lattice of
/// sample points spanning the bounds. Saddle cells are resolved by the cell-center value.
std::vector<Segment> cassini_contour(const RadarSet& radars, const Bounds& bounds, double level,
                                     std::size_t nx, std::size_t ny);

struct Scene {
    Bounds bounds;
    std::vector<Point> transmitters;
    std::vector<Point> receivers;
    std::vector<double> levels;
    std::vector<Point> path;
    std::optional<std::string> title;
    std::size_t contour_resolution = 200;
    /// Draw a reference segment (the barrier) when set.
    std::optional<Segment> barrier;
};

/// Transmitters as squares, receivers as circles, one contour group per level,
/// optional path overlay.
std::string render_svg(const Scene& scene);

}  // namespace cassini
