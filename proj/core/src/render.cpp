#include "cassini/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "cassini/error.hpp"

namespace cassini {

namespace {

Point lerp_edge(const Point& a, const Point& b, double va, double vb, double level) {
    const double denom = vb - va;
    const double f = denom == 0.0 ? 0.5 : std::clamp((level - va) / denom, 0.0, 1.0);
    return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Data space (y up) to SVG pixels (y down) with a fixed margin.
struct Viewport {
    Bounds b;
    double scale = 1.0;
    double margin = 20.0;

    double px(double x) const { return margin + (x - b.x_min) * scale; }
    double py(double y) const { return margin + (b.y_max - y) * scale; }
};

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

}  // namespace

std::vector<Segment> cassini_contour(const RadarSet& radars, const Bounds& bounds, double level, std::size_t nx,
                                     std::size_t ny) {
    if (nx < 2 || ny < 2) throw InputError("contour lattice needs at least 2x2 samples");
    if (!(bounds.x_max > bounds.x_min) || !(bounds.y_max > bounds.y_min)) throw InputError("empty contour bounds");
    const double dx = (bounds.x_max - bounds.x_min) / static_cast<double>(nx - 1);
    const double dy = (bounds.y_max - bounds.y_min) / static_cast<double>(ny - 1);
    auto at = [&](std::size_t i, std::size_t j) {
        return Point{bounds.x_min + static_cast<double>(i) * dx, bounds.y_min + static_cast<double>(j) * dy};
    };
    std::vector<double> v(nx * ny);
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) v[j * nx + i] = detectability(radars, at(i, j));
    }

    std::vector<Segment> out;
    for (std::size_t j = 0; j + 1 < ny; ++j) {
        for (std::size_t i = 0; i + 1 < nx; ++i) {
            // Corners counter-clockwise from bottom-left.
            const std::array<Point, 4> p = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            const std::array<double, 4> f = {v[j * nx + i], v[j * nx + i + 1], v[(j + 1) * nx + i + 1],
                                             v[(j + 1) * nx + i]};
            int mask = 0;
            for (int c = 0; c < 4; ++c) {
                if (f[c] > level) mask |= 1 << c;
            }
            if (mask == 0 || mask == 15) continue;
            auto edge = [&](int e) {  // edge e joins corner e and corner e+1
                const int a = e;
                const int b = (e + 1) % 4;
                return lerp_edge(p[a], p[b], f[a], f[b], level);
            };
            std::vector<int> crossing;
            for (int e = 0; e < 4; ++e) {
                const bool a = (mask >> e) & 1;
                const bool b = (mask >> ((e + 1) % 4)) & 1;
                if (a != b) crossing.push_back(e);
            }
            if (crossing.size() == 2) {
                out.push_back({edge(crossing[0]), edge(crossing[1])});
                continue;
            }
            // Saddle (masks 5 and 10): pair edges according to the center value.
            const Point mid{0.5 * (p[0].x + p[2].x), 0.5 * (p[0].y + p[2].y)};
            const bool center_high = detectability(radars, mid) > level;
            const bool corner0_high = mask & 1;
            if (center_high == corner0_high) {
                // corner 0 connects to corner 2 through the center; separate corners 1 and 3
                out.push_back({edge(0), edge(1)});
                out.push_back({edge(2), edge(3)});
            } else {
                out.push_back({edge(3), edge(0)});
                out.push_back({edge(1), edge(2)});
            }
        }
    }
    return out;
}

std::string render_svg(const Scene& scene) {
    Viewport vp;
    vp.b = scene.bounds;
    const double w = scene.bounds.x_max - scene.bounds.x_min;
    const double h = scene.bounds.y_max - scene.bounds.y_min;
    if (!(w > 0.0) || !(h > 0.0)) throw InputError("render bounds are empty");
    vp.scale = 760.0 / std::max(w, h);
    const double width_px = w * vp.scale + 2 * vp.margin;
    const double height_px = h * vp.scale + 2 * vp.margin + (scene.title ? 20.0 : 0.0);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_px) << "\" height=\"" << num(height_px)
        << "\" viewBox=\"0 0 " << num(width_px) << ' ' << num(height_px) << "\">\n";
    svg << "<rect class=\"field\" x=\"" << num(vp.px(vp.b.x_min)) << "\" y=\"" << num(vp.py(vp.b.y_max))
        << "\" width=\"" << num(w * vp.scale) << "\" height=\"" << num(h * vp.scale)
        << "\" fill=\"white\" stroke=\"black\"/>\n";

    if (scene.barrier) {
        svg << "<line class=\"barrier\" x1=\"" << num(vp.px(scene.barrier->a.x)) << "\" y1=\""
            << num(vp.py(scene.barrier->a.y)) << "\" x2=\"" << num(vp.px(scene.barrier->b.x)) << "\" y2=\""
            << num(vp.py(scene.barrier->b.y)) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    }

    if (!scene.levels.empty()) {
        if (scene.transmitters.empty() || scene.receivers.empty()) {
            throw InputError("contours need at least one transmitter and one receiver");
        }
        const RadarSet radars(scene.transmitters, scene.receivers);
        const std::size_t res = std::max<std::size_t>(scene.contour_resolution, 2);
        const auto nx = std::max<std::size_t>(2, static_cast<std::size_t>(res * (w / std::max(w, h))));
        const auto ny = std::max<std::size_t>(2, static_cast<std::size_t>(res * (h / std::max(w, h))));
        for (std::size_t l = 0; l < scene.levels.size(); ++l) {
            const double level = scene.levels[l];
            const auto segments = cassini_contour(radars, scene.bounds, level, nx, ny);
            svg << "<path class=\"contour\" data-level=\"" << num(level) << "\" fill=\"none\" stroke=\""
                << kPalette[l % kPalette.size()] << "\" stroke-width=\"1\" d=\"";
            for (const auto& s : segments) {
                svg << 'M' << num(vp.px(s.a.x)) << ',' << num(vp.py(s.a.y)) << 'L' << num(vp.px(s.b.x)) << ','
                    << num(vp.py(s.b.y));
            }
            svg << "\"/>\n";
        }
    }

    if (scene.path.size() >= 1) {
        svg << "<polyline class=\"intrusion-path\" fill=\"none\" stroke=\"#e41a1c\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < scene.path.size(); ++i) {
            if (i) svg << ' ';
            svg << num(vp.px(scene.path[i].x)) << ',' << num(vp.py(scene.path[i].y));
        }
        svg << "\"/>\n";
    }

    constexpr double kMarker = 5.0;
    for (const auto& t : scene.transmitters) {
        svg << "<rect class=\"transmitter\" x=\"" << num(vp.px(t.x) - kMarker) << "\" y=\"" << num(vp.py(t.y) - kMarker)
            << "\" width=\"" << num(2 * kMarker) << "\" height=\"" << num(2 * kMarker)
            << "\" fill=\"#222\"/>\n";
    }
    for (const auto& r : scene.receivers) {
        svg << "<circle class=\"receiver\" cx=\"" << num(vp.px(r.x)) << "\" cy=\"" << num(vp.py(r.y)) << "\" r=\""
            << num(kMarker) << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
    }
    if (scene.title) {
        svg << "<text x=\"" << num(vp.margin) << "\" y=\"" << num(height_px - 8.0)
            << "\" font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(*scene.title) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cassini
