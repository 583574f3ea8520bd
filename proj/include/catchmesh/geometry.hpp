#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace catchmesh {

inline constexpr double kPi = 3.14159265358979323846;

// Unit vector on S^2.  The public constructor normalizes its input and
// rejects the zero vector; unchecked() trusts the caller.
struct SpherePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    SpherePoint() = default;
    SpherePoint(double x_, double y_, double z_);

    static SpherePoint unchecked(double x_, double y_, double z_) {
        SpherePoint p;
        p.x = x_;
        p.y = y_;
        p.z = z_;
        return p;
    }

    double dot(const SpherePoint& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// Geodesic (great-circle) distance, radians in [0, pi].  Clamps the dot
// product so antipodal and coincident pairs survive roundoff.
double geodesic_distance(const SpherePoint& a, const SpherePoint& b);

// Finite ordered set of unit points.  Generators construct it directly;
// data read from files goes through validated(), which enforces
// non-emptiness and pairwise distinctness.
struct PointConfiguration {
    std::vector<SpherePoint> points;
    std::string label;

    std::size_t size() const { return points.size(); }

    static PointConfiguration validated(std::vector<SpherePoint> pts, std::string label);
};

// Structure-of-arrays copy used by the scan kernels (contiguous loads
// vectorize; arrays of structs do not).
struct Coords {
    std::vector<double> x, y, z;

    Coords() = default;
    explicit Coords(const PointConfiguration& cfg);

    std::size_t size() const { return x.size(); }
};

} // namespace catchmesh
