#include "cassini/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cassini/error.hpp"

namespace cassini {

namespace {

void require_finite(const Point& p, const char* what) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw InputError(std::string(what) + " has a non-finite coordinate");
    }
}

}  // namespace

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

RadarSet::RadarSet(std::vector<Point> transmitters, std::vector<Point> receivers)
    : transmitters_(std::move(transmitters)), receivers_(std::move(receivers)) {
    if (transmitters_.empty()) throw InputError("radar set needs at least one transmitter");
    if (receivers_.empty()) throw InputError("radar set needs at least one receiver");
    for (const auto& p : transmitters_) require_finite(p, "transmitter");
    for (const auto& p : receivers_) require_finite(p, "receiver");
}

RadarSet RadarSet::with_transmitter(const Point& p) const {
    auto t = transmitters_;
    t.push_back(p);
    return RadarSet(std::move(t), receivers_);
}

RadarSet RadarSet::with_receiver(const Point& p) const {
    auto r = receivers_;
    r.push_back(p);
    return RadarSet(transmitters_, std::move(r));
}

RadarSet RadarSet::swapped() const { return RadarSet(receivers_, transmitters_); }

RectField::RectField(double w, double h) : width(w), height(h) {
    if (!(w > 0.0) || !(h > 0.0) || !std::isfinite(w) || !std::isfinite(h)) {
        throw InputError("field width and height must be positive and finite");
    }
}

double RectField::diagonal() const { return std::hypot(width, height); }

bool RectField::contains(const Point& p) const {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
}

double RectField::distance_to(const Point& p) const {
    const double dx = std::max({0.0 - p.x, 0.0, p.x - width});
    const double dy = std::max({0.0 - p.y, 0.0, p.y - height});
    return std::hypot(dx, dy);
}

RadarConfig::RadarConfig(double k) : bistatic_constant(k) {
    if (!(k > 0.0)) throw InputError("bistatic constant must be positive");
}

double RadarConfig::snr(double detectability) const {
    if (detectability == 0.0) return std::numeric_limits<double>::infinity();
    return bistatic_constant / (detectability * detectability);
}

double distance_product(const Point& t, const Point& r, const Point& p) {
    return distance(t, p) * distance(r, p);
}

NearestPair nearest_pair(const RadarSet& radars, const Point& p) {
    NearestPair out;
    out.transmitter_distance = std::numeric_limits<double>::infinity();
    out.receiver_distance = std::numeric_limits<double>::infinity();
    const auto& tx = radars.transmitters();
    for (std::size_t i = 0; i < tx.size(); ++i) {
        const double d = distance(tx[i], p);
        if (d < out.transmitter_distance) {
            out.transmitter_distance = d;
            out.transmitter = i;
        }
    }
    const auto& rx = radars.receivers();
    for (std::size_t j = 0; j < rx.size(); ++j) {
        const double d = distance(rx[j], p);
        if (d < out.receiver_distance) {
            out.receiver_distance = d;
            out.receiver = j;
        }
    }
    return out;
}

double detectability(const RadarSet& radars, const Point& p) { return nearest_pair(radars, p).product(); }

double path_detectability(const RadarSet& radars, std::span<const Point> polyline, std::optional<double> step) {
    if (polyline.empty()) throw InputError("path_detectability needs a nonempty polyline");
    double length = 0.0;
    for (std::size_t i = 1; i < polyline.size(); ++i) length += distance(polyline[i - 1], polyline[i]);
    const double ds = step.value_or(length * 1e-3);
    if (step && !(*step > 0.0)) throw InputError("sampling step must be positive");

    double best = detectability(radars, polyline.front());
    if (!(ds > 0.0)) return best;  // zero-length path
    for (std::size_t i = 1; i < polyline.size(); ++i) {
        const Point& a = polyline[i - 1];
        const Point& b = polyline[i];
        const double seg = distance(a, b);
        const auto pieces = static_cast<std::size_t>(std::ceil(seg / ds));
        for (std::size_t s = 1; s <= pieces; ++s) {
            const double f = static_cast<double>(s) / static_cast<double>(pieces);
            const Point q{a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
            best = std::min(best, detectability(radars, q));
        }
    }
    return best;
}

double detectability_lipschitz(const RectField& field, const RadarSet& radars) {
    double far = 0.0;
    for (const auto& p : radars.transmitters()) far = std::max(far, field.distance_to(p));
    for (const auto& p : radars.receivers()) far = std::max(far, field.distance_to(p));
    return 2.0 * (field.diagonal() + far);
}

}  // namespace cassini
