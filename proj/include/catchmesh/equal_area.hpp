#pragma once

#include "catchmesh/geometry.hpp"

#include <vector>

namespace catchmesh {

// Zonal equal-area partition bookkeeping: two polar caps plus collars,
// every region of area 4*pi/total.  Exposed separately so the collar
// arithmetic can be checked without going through point generation.
struct EqualAreaLayout {
    int total = 0;                       // number of regions M
    double cap_colatitude = 0.0;         // theta_c = 2*asin(1/sqrt(M))
    std::vector<int> collar_counts;      // regions per collar, north to south
    std::vector<double> boundaries;      // collar boundary colatitudes, size collars+1
};

EqualAreaLayout equal_area_layout(int total);

// One point per region: the poles for the caps, collar points at the
// midpoint colatitude of their collar, equally spaced in longitude with
// each collar's phase shifted half a step against the previous one.
// Order: north pole, collars north to south (west to east inside a
// collar), south pole.  Deterministic; requires total >= 2.
PointConfiguration zonal_equal_area_points(int total);

} // namespace catchmesh
