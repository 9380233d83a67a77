#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cassini {

/// Planar location in meters.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);

/// Transmitter and receiver positions. Both lists must be nonempty; coincident
/// nodes are legal and simply produce zero-detectability spots.
class RadarSet {
public:
    RadarSet(std::vector<Point> transmitters, std::vector<Point> receivers);

    const std::vector<Point>& transmitters() const { return transmitters_; }
    const std::vector<Point>& receivers() const { return receivers_; }
    std::size_t transmitter_count() const { return transmitters_.size(); }
    std::size_t receiver_count() const { return receivers_.size(); }

    RadarSet with_transmitter(const Point& p) const;
    RadarSet with_receiver(const Point& p) const;
    /// Exchanges the roles of transmitters and receivers.
    RadarSet swapped() const;

private:
    std::vector<Point> transmitters_;
    std::vector<Point> receivers_;
};

/// Axis-aligned field [0, width] x [0, height]. Intruders enter through the top
/// edge (y = height) and leave through the bottom edge (y = 0); the vertical
/// edges are the left and right boundaries.
struct RectField {
    double width = 0.0;
    double height = 0.0;

    RectField() = default;
    RectField(double w, double h);

    double diagonal() const;
    bool contains(const Point& p) const;
    /// Euclidean distance from p to the closed rectangle (0 inside).
    double distance_to(const Point& p) const;
};

/// Physical-layer scale. Only used to report SNR; all planning works in raw
/// distance products.
struct RadarConfig {
    double bistatic_constant = 1.0;

    explicit RadarConfig(double k = 1.0);
    /// SNR = K / I^2, +inf when the detectability is zero.
    double snr(double detectability) const;
};

/// ||tp|| * ||rp||, the Cassini level of p for foci t and r.
double distance_product(const Point& t, const Point& r, const Point& p);

struct NearestPair {
    std::size_t transmitter = 0;
    std::size_t receiver = 0;
    double transmitter_distance = 0.0;
    double receiver_distance = 0.0;

    double product() const { return transmitter_distance * receiver_distance; }
};

/// Closest transmitter and closest receiver to p (lowest index on ties). The
/// pair identifies the 2-site Voronoi region containing p.
NearestPair nearest_pair(const RadarSet& radars, const Point& p);

/// I(p): the minimum distance product over all transmitter/receiver pairs.
/// Evaluated through the factorization min_i ||T_i p|| * min_j ||R_j p||.
double detectability(const RadarSet& radars, const Point& p);

/// B(P) for a polyline: min of I over uniform arc-length samples. Every vertex
/// is sampled too. The default step is 1e-3 of the polyline length.
double path_detectability(const RadarSet& radars, std::span<const Point> polyline,
                          std::optional<double> step = std::nullopt);

/// Upper bound on the gradient norm of I over the field:
/// 2 * (field diagonal + max distance from any radar to the field).
double detectability_lipschitz(const RectField& field, const RadarSet& radars);

}  // namespace cassini
