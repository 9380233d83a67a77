#include "cassini/line_vulnerability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cassini/error.hpp"

namespace cassini {

double line_detectability(const LineDeployment& dep, double x) {
    double dt = std::numeric_limits<double>::infinity();
    double dr = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dep.order.size(); ++i) {
        const double d = std::abs(x - dep.positions[i]);
        if (dep.order[i] == NodeKind::Transmitter) {
            dt = std::min(dt, d);
        } else {
            dr = std::min(dr, d);
        }
    }
    return dt * dr;
}

VulnerabilityReport vulnerability(const LineDeployment& dep) {
    dep.validate();
    const std::size_t j = dep.positions.size();
    constexpr double kNone = std::numeric_limits<double>::quiet_NaN();
    // Nearest node of each kind at or left of index i, and at or right of it.
    std::vector<double> left_t(j, kNone), left_r(j, kNone), right_t(j, kNone), right_r(j, kNone);
    double lt = kNone, lr = kNone;
    for (std::size_t i = 0; i < j; ++i) {
        (dep.order[i] == NodeKind::Transmitter ? lt : lr) = dep.positions[i];
        left_t[i] = lt;
        left_r[i] = lr;
    }
    double rt = kNone, rr = kNone;
    for (std::size_t i = j; i-- > 0;) {
        (dep.order[i] == NodeKind::Transmitter ? rt : rr) = dep.positions[i];
        right_t[i] = rt;
        right_r[i] = rr;
    }
    auto nearest = [](double x, double a, double b) {
        const double da = std::isnan(a) ? std::numeric_limits<double>::infinity() : std::abs(x - a);
        const double db = std::isnan(b) ? std::numeric_limits<double>::infinity() : std::abs(x - b);
        return std::min(da, db);
    };

    VulnerabilityReport report;
    report.witnesses.reserve(j + 1);
    report.witnesses.push_back({0.0, nearest(0.0, kNone, right_t[0]) * nearest(0.0, kNone, right_r[0])});
    for (std::size_t i = 1; i < j; ++i) {
        const double x = 0.5 * (dep.positions[i - 1] + dep.positions[i]);
        const double dt = nearest(x, left_t[i - 1], right_t[i]);
        const double dr = nearest(x, left_r[i - 1], right_r[i]);
        report.witnesses.push_back({x, dt * dr});
    }
    report.witnesses.push_back({dep.h, nearest(dep.h, left_t[j - 1], kNone) * nearest(dep.h, left_r[j - 1], kNone)});
    report.q = std::max_element(report.witnesses.begin(), report.witnesses.end(),
                                [](const Witness& a, const Witness& b) { return a.value < b.value; })
                   ->value;
    return report;
}

std::vector<LineSample> line_profile(const LineDeployment& dep, double step) {
    if (!(step > 0.0)) throw InputError("oracle step must be positive");
    dep.validate();
    const auto count = static_cast<std::size_t>(std::floor(dep.h / step));
    std::vector<LineSample> out;
    out.reserve(count + 2);
    for (std::size_t k = 0; k <= count; ++k) {
        const double x = std::min(static_cast<double>(k) * step, dep.h);
        out.push_back({x, line_detectability(dep, x)});
    }
    if (out.back().x < dep.h) out.push_back({dep.h, line_detectability(dep, dep.h)});
    return out;
}

double vulnerability_oracle(const LineDeployment& dep, double step) {
    const auto samples = line_profile(dep, step);
    double best = 0.0;
    for (const auto& s : samples) best = std::max(best, s.value);
    return best;
}

}  // namespace cassini
