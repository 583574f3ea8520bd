#include "catchmesh/padua.hpp"

#include "catchmesh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catchmesh {

double dubiner_distance_square(const SquarePoint& a, const SquarePoint& b) {
    const auto ang = [](double t) { return std::acos(std::clamp(t, -1.0, 1.0)); };
    return std::max(std::abs(ang(a.u) - ang(b.u)), std::abs(ang(a.v) - ang(b.v)));
}

namespace {

// Chebyshev-Lobatto abscissa cos(j*pi/s); endpoints made exact.
double lobatto(int j, int s) {
    if (j == 0) return 1.0;
    if (j == s) return -1.0;
    if (2 * j == s) return 0.0;
    return std::cos(j * kPi / s);
}

} // namespace

PaduaSet padua_points(int k) {
    if (k < 1)
        throw std::invalid_argument("padua_points: degree must be >= 1");

    PaduaSet set;
    set.degree = k;
    set.points.reserve(static_cast<std::size_t>(k + 1) * (k + 2) / 2);

    // First coordinate ranges over C_{k+1} (denominator k), second over
    // C_{k+2} (denominator k+1); opposite parities of the two indices
    // select the two interleaved subgrids, which are disjoint by parity.
    for (int j1 = 0; j1 <= k; j1 += 2)
        for (int j2 = 1; j2 <= k + 1; j2 += 2)
            set.points.push_back({lobatto(j1, k), lobatto(j2, k + 1)});
    for (int j1 = 1; j1 <= k; j1 += 2)
        for (int j2 = 0; j2 <= k + 1; j2 += 2)
            set.points.push_back({lobatto(j1, k), lobatto(j2, k + 1)});

    return set;
}

SquareMesh padua_optimal_mesh(int n, double theta) {
    if (n < 1)
        throw std::invalid_argument("padua_optimal_mesh: degree must be >= 1");
    if (!(theta > 0.0) || !(theta < 1.0))
        throw std::invalid_argument("padua_optimal_mesh: theta must lie in (0,1)");

    const int nu = static_cast<int>(std::ceil(kPi * n / theta));

    SquareMesh mesh;
    mesh.set = padua_points(nu);
    mesh.poly_degree = n;
    mesh.theta = theta;
    mesh.mesh_constant = 1.0 / (1.0 - theta);
    return mesh;
}

} // namespace catchmesh
