#pragma once

#include <vector>

#include "cassini/spacing.hpp"

namespace cassini {

struct Witness {
    double position = 0.0;
    double value = 0.0;
};

struct VulnerabilityReport {
    double q = 0.0;
    /// H_l, every neighbor midpoint, then H_r, ordered by position.
    std::vector<Witness> witnesses;
};

/// I(x) on the barrier: distance to the nearest transmitter times distance to the nearest receiver.
double line_detectability(const LineDeployment& dep, double x);

/// Exact Q over [0, h]: the maximum of I over the end points and neighbor
/// midpoints, which are the only local maxima.
VulnerabilityReport vulnerability(const LineDeployment& dep);

struct LineSample {
    double x = 0.0;
    double value = 0.0;
};

/// I sampled at 0, step, 2 step, ... and finally at h.
std::vector<LineSample> line_profile(const LineDeployment& dep, double step);

/// Maximum of line_profile. Throws InputError for step <= 0.
double vulnerability_oracle(const LineDeployment& dep, double step);

}  // namespace cassini
