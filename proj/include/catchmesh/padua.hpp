#pragma once

#include <cstddef>
#include <vector>

namespace catchmesh {

struct SquarePoint {
    double u = 0.0;
    double v = 0.0;
};

// Dubiner distance on [-1,1]^2:
//   max(|acos a.u - acos b.u|, |acos a.v - acos b.v|),
// i.e. the Chebyshev distance between the points' angular coordinates.
double dubiner_distance_square(const SquarePoint& a, const SquarePoint& b);

struct PaduaSet {
    std::vector<SquarePoint> points;
    int degree = 0;   // interpolation degree k
};

// Degree-k Padua points: union of the two interleaved Chebyshev subgrids
//   {C^even_{k+1} x C^odd_{k+2}} and {C^odd_{k+1} x C^even_{k+2}},
// where C_{s+1} = {cos(j*pi/s)}.  Cardinality (k+1)(k+2)/2.  Order:
// even-j1 grid then odd-j1 grid, each lexicographic in (j1, j2).
PaduaSet padua_points(int k);

struct SquareMesh {
    PaduaSet set;
    int poly_degree = 0;     // n
    double theta = 0.0;
    double mesh_constant = 0.0;   // 1 / (1 - theta)
};

// Optimal norming mesh on the square for degree n: Padua points of degree
// nu = ceil(pi * n / theta).
SquareMesh padua_optimal_mesh(int n, double theta = 0.5);

} // namespace catchmesh
