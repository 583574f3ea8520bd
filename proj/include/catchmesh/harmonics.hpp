#pragma once

#include "catchmesh/geometry.hpp"

#include <Eigen/Core>

#include <span>
#include <string>
#include <vector>

namespace catchmesh {

// Real orthonormal spherical harmonics Y_{l,m}, unit L^2 norm on S^2,
// no Condon-Shortley phase:
//   Y_{l,0}   = Pbar_l^0(cos th)
//   Y_{l,+m}  = sqrt(2) * Pbar_l^m(cos th) * cos(m*phi)
//   Y_{l,-m}  = sqrt(2) * Pbar_l^m(cos th) * sin(m*phi)
// Linear order: k = l^2 + l + m, i.e. degree-major with m = -l..l inside.

struct BasisIndex {
    int l = 0;
    int m = 0;
};

constexpr long basis_dimension(int n) { return static_cast<long>(n + 1) * (n + 1); }

long linear_index(int l, int m);
BasisIndex basis_index_from_linear(long k);

// Evaluates all (n+1)^2 basis functions at one unit point into out.
// Fully normalized three-term recurrences; stable through degree 60.
void eval_basis(const SpherePoint& p, int n, std::span<double> out);
std::vector<double> eval_basis(const SpherePoint& p, int n);

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// V[i][k] = Y_k(x_i); rows follow configuration order, columns the linear
// basis order.  Row-major so each point's basis row is contiguous.
struct VandermondeMatrix {
    RowMajorMatrix entries;
    int degree = 0;
    std::string config_label;
};

VandermondeMatrix vandermonde(const PointConfiguration& cfg, int n);
VandermondeMatrix vandermonde_serial(const PointConfiguration& cfg, int n);

namespace detail {
// No validation, no allocation; safe to call inside parallel regions.
void eval_basis_unchecked(double x, double y, double z, int n, double* out);
} // namespace detail

} // namespace catchmesh
