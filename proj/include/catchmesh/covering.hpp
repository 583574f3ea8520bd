#pragma once

#include "catchmesh/geometry.hpp"

namespace catchmesh {

// Covering radius of a configuration relative to a probe set:
// max over probe points of the distance to the nearest configuration
// point, reported in both metrics.  The scan works on dot products
// (max dot <=> min distance) so no trig runs in the inner loop.
struct CoveringRadius {
    double euclidean = 0.0;
    double geodesic = 0.0;
};

CoveringRadius covering_radius(const PointConfiguration& config,
                               const PointConfiguration& probe);
CoveringRadius covering_radius_serial(const PointConfiguration& config,
                                      const PointConfiguration& probe);

// True iff every probe point lies within geodesic distance theta/n of the
// configuration — the covering criterion that certifies a degree-n mesh.
bool verify_dubiner_covering(const PointConfiguration& config, int n, double theta,
                             const PointConfiguration& probe);
bool verify_dubiner_covering_serial(const PointConfiguration& config, int n, double theta,
                                    const PointConfiguration& probe);

namespace kernels {

// min over probe of (max over config of <probe_i, config_j>).
double min_max_dot(const Coords& probe, const Coords& config);
double min_max_dot_serial(const Coords& probe, const Coords& config);

// Every probe point has some config point with dot >= threshold.
// The parallel version may finish early on failure; the boolean agrees
// with the serial one exactly.
bool all_dot_at_least(const Coords& probe, const Coords& config, double threshold);
bool all_dot_at_least_serial(const Coords& probe, const Coords& config, double threshold);

} // namespace kernels

} // namespace catchmesh
