#include "catchmesh/covering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catchmesh {

namespace kernels {

namespace {

// Innermost scan shared by both drivers: nearest-config dot for one probe
// point.  Plain loop over contiguous arrays; gcc vectorizes it.
inline double max_dot_one(double px, double py, double pz, const Coords& config) {
    const std::size_t m = config.size();
    const double* cx = config.x.data();
    const double* cy = config.y.data();
    const double* cz = config.z.data();
    double best = -2.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double d = px * cx[j] + py * cy[j] + pz * cz[j];
        best = d > best ? d : best;
    }
    return best;
}

} // namespace

double min_max_dot(const Coords& probe, const Coords& config) {
    const long n = static_cast<long>(probe.size());
    double worst = 2.0;
#pragma omp parallel for schedule(static) reduction(min : worst)
    for (long i = 0; i < n; ++i) {
        const double d = max_dot_one(probe.x[i], probe.y[i], probe.z[i], config);
        worst = d < worst ? d : worst;
    }
    return worst;
}

double min_max_dot_serial(const Coords& probe, const Coords& config) {
    const long n = static_cast<long>(probe.size());
    double worst = 2.0;
    for (long i = 0; i < n; ++i) {
        const double d = max_dot_one(probe.x[i], probe.y[i], probe.z[i], config);
        worst = d < worst ? d : worst;
    }
    return worst;
}

bool all_dot_at_least(const Coords& probe, const Coords& config, double threshold) {
    const long n = static_cast<long>(probe.size());
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (long i = 0; i < n; ++i) {
        if (!ok) continue;   // cheap skip once a thread has failed
        if (max_dot_one(probe.x[i], probe.y[i], probe.z[i], config) < threshold)
            ok = false;
    }
    return ok;
}

bool all_dot_at_least_serial(const Coords& probe, const Coords& config, double threshold) {
    const long n = static_cast<long>(probe.size());
    for (long i = 0; i < n; ++i)
        if (max_dot_one(probe.x[i], probe.y[i], probe.z[i], config) < threshold)
            return false;
    return true;
}

} // namespace kernels

namespace {

CoveringRadius radius_from_min_dot(double min_dot) {
    // Euclidean distance from a dot product, then the exact chord->arc map.
    const double clamped = std::clamp(min_dot, -1.0, 1.0);
    CoveringRadius r;
    r.euclidean = std::sqrt(std::max(0.0, 2.0 - 2.0 * clamped));
    r.geodesic = 2.0 * std::asin(std::min(1.0, r.euclidean / 2.0));
    return r;
}

void check_nonempty(const PointConfiguration& config, const PointConfiguration& probe) {
    if (config.size() == 0 || probe.size() == 0)
        throw std::invalid_argument("covering scan: empty configuration or probe");
}

} // namespace

CoveringRadius covering_radius(const PointConfiguration& config,
                               const PointConfiguration& probe) {
    check_nonempty(config, probe);
    return radius_from_min_dot(kernels::min_max_dot(Coords(probe), Coords(config)));
}

CoveringRadius covering_radius_serial(const PointConfiguration& config,
                                      const PointConfiguration& probe) {
    check_nonempty(config, probe);
    return radius_from_min_dot(kernels::min_max_dot_serial(Coords(probe), Coords(config)));
}

namespace {

double covering_threshold(int n, double theta) {
    if (n < 1 || !(theta > 0.0) || !(theta < 1.0))
        throw std::invalid_argument("verify_dubiner_covering: need n >= 1, theta in (0,1)");
    // Geodesic ball of radius theta/n around each probe point must contain
    // a configuration point; in dot products that is cos(theta/n).
    return std::cos(theta / n);
}

} // namespace

bool verify_dubiner_covering(const PointConfiguration& config, int n, double theta,
                             const PointConfiguration& probe) {
    check_nonempty(config, probe);
    const double t = covering_threshold(n, theta);
    return kernels::all_dot_at_least(Coords(probe), Coords(config), t);
}

bool verify_dubiner_covering_serial(const PointConfiguration& config, int n, double theta,
                                    const PointConfiguration& probe) {
    check_nonempty(config, probe);
    const double t = covering_threshold(n, theta);
    return kernels::all_dot_at_least_serial(Coords(probe), Coords(config), t);
}

} // namespace catchmesh
