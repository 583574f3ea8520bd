#include "catchmesh/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace catchmesh {

SpherePoint::SpherePoint(double x_, double y_, double z_) {
    const double r = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::invalid_argument("SpherePoint: cannot normalize zero or non-finite vector");
    x = x_ / r;
    y = y_ / r;
    z = z_ / r;
}

double geodesic_distance(const SpherePoint& a, const SpherePoint& b) {
    const double d = std::clamp(a.dot(b), -1.0, 1.0);
    return std::acos(d);
}

PointConfiguration PointConfiguration::validated(std::vector<SpherePoint> pts,
                                                 std::string label) {
    if (pts.empty())
        throw std::invalid_argument("PointConfiguration: empty point set");

    // Duplicate scan without the O(M^2) blowup: sort index views
    // lexicographically, then only neighbors can coincide.
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const SpherePoint &a = pts[i], &b = pts[j];
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        const SpherePoint &a = pts[order[k - 1]], &b = pts[order[k]];
        if (a.x == b.x && a.y == b.y && a.z == b.z)
            throw std::invalid_argument("PointConfiguration: duplicate point");
    }

    PointConfiguration cfg;
    cfg.points = std::move(pts);
    cfg.label = std::move(label);
    return cfg;
}

Coords::Coords(const PointConfiguration& cfg) {
    const std::size_t m = cfg.size();
    x.resize(m);
    y.resize(m);
    z.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = cfg.points[i].x;
        y[i] = cfg.points[i].y;
        z[i] = cfg.points[i].z;
    }
}

} // namespace catchmesh
