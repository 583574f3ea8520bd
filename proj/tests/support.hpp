// Shared oracles for the test suite. Everything here is computed by a route
// independent of the library code under test.
#pragma once

#include "catchmesh/geometry.hpp"
#include "catchmesh/harmonics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

namespace testsupport {

// Gauss-Legendre nodes/weights on [-1,1] by Newton on the Legendre recurrence.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(catchmesh::kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

// Surface quadrature exact for spherical polynomials of total degree <= deg:
// Gauss-Legendre in cos(theta) x uniform trapezoid in phi.
struct SurfaceQuadrature {
    std::vector<catchmesh::SpherePoint> nodes;
    std::vector<double> weights;  // sum to 4*pi

    explicit SurfaceQuadrature(int deg) {
        const int nt = deg / 2 + 2;
        const int np = deg + 2;
        std::vector<double> gx, gw;
        gauss_legendre(nt, gx, gw);
        const double dphi = 2.0 * catchmesh::kPi / np;
        for (int i = 0; i < nt; ++i) {
            const double ct = gx[i];
            const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            for (int j = 0; j < np; ++j) {
                const double phi = dphi * j;
                nodes.push_back(catchmesh::SpherePoint::unchecked(
                    st * std::cos(phi), st * std::sin(phi), ct));
                weights.push_back(gw[i] * dphi);
            }
        }
    }
};

// Gram matrix of the degree-n basis under the surface quadrature.
inline Eigen::MatrixXd gram_matrix(int n) {
    const int dim = catchmesh::basis_dimension(n);
    SurfaceQuadrature quad(2 * n);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<double> row(dim);
    for (std::size_t k = 0; k < quad.nodes.size(); ++k) {
        catchmesh::eval_basis(quad.nodes[k], n, row);
        const Eigen::Map<const Eigen::VectorXd> y(row.data(), dim);
        g.selfadjointView<Eigen::Lower>().rankUpdate(y, quad.weights[k]);
    }
    return g.selfadjointView<Eigen::Lower>();
}

// Brute-force NNLS by support enumeration: every subset whose unconstrained
// restricted LS is componentwise nonnegative is a candidate; the optimum's
// support is always among them, so the smallest candidate residual is the
// global minimum.
struct BruteForceNnls {
    Eigen::VectorXd u;
    double residual_norm;
};

inline BruteForceNnls brute_force_nnls(const Eigen::MatrixXd& a,
                                       const Eigen::VectorXd& b) {
    const int n = static_cast<int>(a.cols());
    BruteForceNnls best;
    best.u = Eigen::VectorXd::Zero(n);
    best.residual_norm = b.norm();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) idx.push_back(j);
        if (static_cast<long>(idx.size()) > a.rows()) continue;
        Eigen::MatrixXd sub(a.rows(), idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) sub.col(k) = a.col(idx[k]);
        const Eigen::VectorXd z = sub.colPivHouseholderQr().solve(b);
        if ((z.array() < -1e-12).any()) continue;
        const double res = (sub * z - b).norm();
        if (res < best.residual_norm - 1e-14) {
            best.residual_norm = res;
            best.u.setZero();
            for (std::size_t k = 0; k < idx.size(); ++k)
                best.u[idx[k]] = std::max(0.0, z[k]);
        }
    }
    return best;
}

// Uniform random proper rotation (QR of a Gaussian matrix, det fixed to +1).
inline Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = gauss(rng);
    const Eigen::HouseholderQR<Eigen::Matrix3d> qr(m);
    Eigen::Matrix3d q = qr.householderQ();
    Eigen::Matrix3d r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 3; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    if (q.determinant() < 0) q.col(2) = -q.col(2);
    return q;
}

inline catchmesh::SpherePoint rotate(const Eigen::Matrix3d& q,
                                     const catchmesh::SpherePoint& p) {
    const Eigen::Vector3d v = q * Eigen::Vector3d(p.x, p.y, p.z);
    return catchmesh::SpherePoint::unchecked(v.x(), v.y(), v.z());
}

inline std::vector<double> random_coefficients(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<double> c(catchmesh::basis_dimension(n));
    for (double& v : c) v = gauss(rng);
    return c;
}

inline double eval_with_coeffs(const std::vector<double>& c, int n,
                               const catchmesh::SpherePoint& p) {
    std::vector<double> row(c.size());
    catchmesh::eval_basis(p, n, row);
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * row[k];
    return s;
}

} // namespace testsupport
