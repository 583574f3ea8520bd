#include "catchmesh/equal_area.hpp"

#include "catchmesh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catchmesh {

EqualAreaLayout equal_area_layout(int total) {
    if (total < 2)
        throw std::invalid_argument("equal_area_layout: need at least 2 regions");

    EqualAreaLayout layout;
    layout.total = total;
    // Polar caps of area 4*pi/M: cos(theta_c) = 1 - 2/M.
    layout.cap_colatitude = 2.0 * std::asin(1.0 / std::sqrt(static_cast<double>(total)));

    if (total == 2) {
        layout.boundaries = {layout.cap_colatitude, kPi - layout.cap_colatitude};
        return layout;
    }

    const double theta_c = layout.cap_colatitude;
    const double band = kPi - 2.0 * theta_c;
    const double ideal_angle = std::sqrt(4.0 * kPi / total);
    const int collars = std::max(1, static_cast<int>(std::lround(band / ideal_angle)));
    const double fitting_angle = band / collars;

    // Ideal (fractional) region count per collar from its area, rounded
    // with a running discrepancy so the total stays exact.
    layout.collar_counts.resize(collars);
    double carry = 0.0;
    double cos_top = std::cos(theta_c);
    for (int i = 0; i < collars; ++i) {
        const double bottom = theta_c + (i + 1) * fitting_angle;
        const double cos_bottom = (i + 1 == collars) ? std::cos(kPi - theta_c)
                                                     : std::cos(bottom);
        const double ideal = (cos_top - cos_bottom) * total / 2.0;
        const long count = std::lround(ideal + carry);
        carry += ideal - static_cast<double>(count);
        layout.collar_counts[i] = static_cast<int>(count);
        cos_top = cos_bottom;
    }

    long assigned = 2;
    for (int c : layout.collar_counts) assigned += c;
    if (assigned != total)
        throw numerical_error("equal_area_layout: collar rounding lost regions");

    // Boundaries re-derived from the integer counts so every collar holds
    // exactly count * (4*pi/M) of area.
    layout.boundaries.resize(collars + 1);
    long cumulative = 1;
    layout.boundaries[0] = theta_c;
    for (int i = 0; i < collars; ++i) {
        cumulative += layout.collar_counts[i];
        const double c = 1.0 - 2.0 * static_cast<double>(cumulative) / total;
        layout.boundaries[i + 1] = std::acos(std::clamp(c, -1.0, 1.0));
    }
    return layout;
}

PointConfiguration zonal_equal_area_points(int total) {
    const EqualAreaLayout layout = equal_area_layout(total);

    PointConfiguration cfg;
    cfg.label = "zonal_equal_area_" + std::to_string(total);
    cfg.points.reserve(total);

    cfg.points.push_back(SpherePoint::unchecked(0.0, 0.0, 1.0));

    double offset = 0.0;
    for (std::size_t i = 0; i < layout.collar_counts.size(); ++i) {
        const int k = layout.collar_counts[i];
        if (k == 0) continue;
        // Half-step stagger against the previous collar keeps neighboring
        // rings from aligning their gaps.
        offset += kPi / k;
        const double theta = 0.5 * (layout.boundaries[i] + layout.boundaries[i + 1]);
        const double st = std::sin(theta);
        const double ct = std::cos(theta);
        for (int j = 0; j < k; ++j) {
            const double phi = offset + 2.0 * kPi * j / k;
            cfg.points.push_back(SpherePoint::unchecked(st * std::cos(phi),
                                                        st * std::sin(phi), ct));
        }
    }

    cfg.points.push_back(SpherePoint::unchecked(0.0, 0.0, -1.0));

    if (static_cast<int>(cfg.points.size()) != total)
        throw numerical_error("zonal_equal_area_points: cardinality mismatch");
    return cfg;
}

} // namespace catchmesh
