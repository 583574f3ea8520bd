#include "catchmesh/least_squares.hpp"

#include "catchmesh/equal_area.hpp"
#include "catchmesh/errors.hpp"
#include "catchmesh/harmonics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace catchmesh {

namespace {

void check_fit_args(const PointConfiguration& pts, std::span<const double> weights,
                    int n, std::span<const double> samples) {
    if (n < 0)
        throw std::invalid_argument("ls_fit: negative degree");
    const long m = static_cast<long>(pts.size());
    const long dim = basis_dimension(n);
    if (m < dim)
        throw std::invalid_argument("ls_fit: fewer points than basis functions");
    if (static_cast<long>(samples.size()) != m)
        throw std::invalid_argument("ls_fit: sample count does not match point count");
    if (static_cast<long>(weights.size()) != m)
        throw std::invalid_argument("ls_fit: weight count does not match point count");
    for (double w : weights)
        if (!(w > 0.0))
            throw std::invalid_argument("ls_fit: weights must be positive");
}

// Rows of V scaled by sqrt(w): the design matrix whose plain least squares
// solution is the weighted fit.  Normal equations are never formed.
RowMajorMatrix scaled_design(const PointConfiguration& pts,
                             std::span<const double> weights, int n) {
    RowMajorMatrix b = vandermonde(pts, n).entries;
    for (long i = 0; i < b.rows(); ++i) b.row(i) *= std::sqrt(weights[i]);
    return b;
}

} // namespace

HarmonicCoefficients weighted_ls_fit(const PointConfiguration& pts,
                                     std::span<const double> weights, int n,
                                     std::span<const double> samples) {
    check_fit_args(pts, weights, n, samples);
    const long m = static_cast<long>(pts.size());
    const long dim = basis_dimension(n);

    const Eigen::MatrixXd b = scaled_design(pts, weights, n);
    Eigen::VectorXd rhs(m);
    for (long i = 0; i < m; ++i) rhs[i] = std::sqrt(weights[i]) * samples[i];

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(b);
    if (qr.rank() < dim)
        throw numerical_error("weighted_ls_fit: design matrix is rank deficient");

    HarmonicCoefficients out;
    out.coeffs = qr.solve(rhs);
    out.degree = n;
    return out;
}

HarmonicCoefficients unweighted_ls_fit(const PointConfiguration& pts, int n,
                                       std::span<const double> samples) {
    const std::vector<double> ones(pts.size(), 1.0);
    return weighted_ls_fit(pts, ones, n, samples);
}

std::vector<double> evaluate_poly(const HarmonicCoefficients& coeffs,
                                  const PointConfiguration& pts) {
    const long dim = basis_dimension(coeffs.degree);
    if (coeffs.coeffs.size() != dim)
        throw std::invalid_argument("evaluate_poly: coefficient length mismatch");
    const long m = static_cast<long>(pts.size());
    std::vector<double> out(m);

    // Streamed: one basis row at a time, never the full Vandermonde.
#pragma omp parallel
    {
        std::vector<double> phi(dim);
#pragma omp for schedule(static)
        for (long i = 0; i < m; ++i) {
            const SpherePoint& p = pts.points[i];
            detail::eval_basis_unchecked(p.x, p.y, p.z, coeffs.degree, phi.data());
            double v = 0.0;
            for (long k = 0; k < dim; ++k) v += phi[k] * coeffs.coeffs[k];
            out[i] = v;
        }
    }
    return out;
}

namespace {

// Shared setup for the operator norm scans: thin Q of diag(sqrt(w)) V with
// rows rescaled by sqrt(w), plus the pieces needed to map a basis row to
// coordinates in the orthonormalized column space.
struct LebesgueKernel {
    Eigen::MatrixXd q_scaled;            // M x dim, rows carry the weights
    Eigen::MatrixXd r;                   // dim x dim upper triangular
    Eigen::VectorXi perm;                // column permutation of the QR
    int degree = 0;

    // Lambda(x) = sum_j sqrt(w_j) |(Q psi)_j|, psi = R^{-T} P^T phi(x).
    double lebesgue_at(const SpherePoint& p, std::vector<double>& phi,
                       Eigen::VectorXd& psi) const {
        detail::eval_basis_unchecked(p.x, p.y, p.z, degree, phi.data());
        const long dim = r.rows();
        for (long k = 0; k < dim; ++k) psi[k] = phi[perm[k]];
        r.transpose().triangularView<Eigen::Lower>().solveInPlace(psi);
        return (q_scaled * psi).cwiseAbs().sum();
    }
};

LebesgueKernel make_lebesgue_kernel(const PointConfiguration& pts,
                                    std::span<const double> weights, int n) {
    if (n < 0)
        throw std::invalid_argument("ls_operator_norm: negative degree");
    const long m = static_cast<long>(pts.size());
    const long dim = basis_dimension(n);
    if (m < dim)
        throw std::invalid_argument("ls_operator_norm: fewer points than basis functions");
    if (static_cast<long>(weights.size()) != m)
        throw std::invalid_argument("ls_operator_norm: weight count mismatch");
    for (double w : weights)
        if (!(w > 0.0))
            throw std::invalid_argument("ls_operator_norm: weights must be positive");

    const Eigen::MatrixXd b = scaled_design(pts, weights, n);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(b);
    if (qr.rank() < dim)
        throw numerical_error("ls_operator_norm: design matrix is rank deficient");

    LebesgueKernel kernel;
    kernel.degree = n;
    kernel.q_scaled = qr.householderQ() * Eigen::MatrixXd::Identity(m, dim);
    for (long i = 0; i < m; ++i) kernel.q_scaled.row(i) *= std::sqrt(weights[i]);
    kernel.r = qr.matrixR().topLeftCorner(dim, dim).triangularView<Eigen::Upper>();
    kernel.perm = qr.colsPermutation().indices();
    return kernel;
}

} // namespace

double ls_operator_norm(const PointConfiguration& pts, std::span<const double> weights,
                        int n, const PointConfiguration& control) {
    if (control.size() == 0)
        throw std::invalid_argument("ls_operator_norm: empty control grid");
    const LebesgueKernel kernel = make_lebesgue_kernel(pts, weights, n);
    const long c = static_cast<long>(control.size());
    const long dim = basis_dimension(n);

    double worst = 0.0;
#pragma omp parallel
    {
        std::vector<double> phi(dim);
        Eigen::VectorXd psi(dim);
#pragma omp for schedule(static) reduction(max : worst)
        for (long i = 0; i < c; ++i) {
            const double v = kernel.lebesgue_at(control.points[i], phi, psi);
            worst = v > worst ? v : worst;
        }
    }
    return worst;
}

double ls_operator_norm_serial(const PointConfiguration& pts,
                               std::span<const double> weights, int n,
                               const PointConfiguration& control) {
    if (control.size() == 0)
        throw std::invalid_argument("ls_operator_norm: empty control grid");
    const LebesgueKernel kernel = make_lebesgue_kernel(pts, weights, n);
    const long c = static_cast<long>(control.size());
    const long dim = basis_dimension(n);

    double worst = 0.0;
    std::vector<double> phi(dim);
    Eigen::VectorXd psi(dim);
    for (long i = 0; i < c; ++i) {
        const double v = kernel.lebesgue_at(control.points[i], phi, psi);
        worst = v > worst ? v : worst;
    }
    return worst;
}

double test_function(int id, const SpherePoint& p) {
    switch (id) {
    case 1: {
        const double s = p.x + p.y + p.z;
        return std::pow(s, 15);
    }
    case 2:
        return std::exp(p.x + p.y + p.z) / 10.0;
    case 3:
        return (std::abs(p.x) + std::abs(p.y) + std::abs(p.z)) / 10.0;
    }
    throw std::invalid_argument("test_function: id must be 1, 2 or 3");
}

double sup_error(const HarmonicCoefficients& coeffs,
                 const std::function<double(const SpherePoint&)>& f,
                 const PointConfiguration& control) {
    if (control.size() == 0)
        throw std::invalid_argument("sup_error: empty control grid");
    const long dim = basis_dimension(coeffs.degree);
    if (coeffs.coeffs.size() != dim)
        throw std::invalid_argument("sup_error: coefficient length mismatch");
    const long c = static_cast<long>(control.size());

    double worst = 0.0;
#pragma omp parallel
    {
        std::vector<double> phi(dim);
#pragma omp for schedule(static) reduction(max : worst)
        for (long i = 0; i < c; ++i) {
            const SpherePoint& p = control.points[i];
            detail::eval_basis_unchecked(p.x, p.y, p.z, coeffs.degree, phi.data());
            double v = 0.0;
            for (long k = 0; k < dim; ++k) v += phi[k] * coeffs.coeffs[k];
            const double e = std::abs(f(p) - v);
            worst = e > worst ? e : worst;
        }
    }
    return worst;
}

double sup_error_serial(const HarmonicCoefficients& coeffs,
                        const std::function<double(const SpherePoint&)>& f,
                        const PointConfiguration& control) {
    if (control.size() == 0)
        throw std::invalid_argument("sup_error: empty control grid");
    const long dim = basis_dimension(coeffs.degree);
    if (coeffs.coeffs.size() != dim)
        throw std::invalid_argument("sup_error: coefficient length mismatch");
    const long c = static_cast<long>(control.size());

    double worst = 0.0;
    std::vector<double> phi(dim);
    for (long i = 0; i < c; ++i) {
        const SpherePoint& p = control.points[i];
        detail::eval_basis_unchecked(p.x, p.y, p.z, coeffs.degree, phi.data());
        double v = 0.0;
        for (long k = 0; k < dim; ++k) v += phi[k] * coeffs.coeffs[k];
        const double e = std::abs(f(p) - v);
        worst = e > worst ? e : worst;
    }
    return worst;
}

PointConfiguration control_grid(int n, long requested) {
    long size = requested;
    if (size <= 0) {
        const long by_degree = 100L * basis_dimension(n);
        size = std::max(by_degree, 50000L);
    }
    if (size < 2)
        throw std::invalid_argument("control_grid: need at least 2 points");
    PointConfiguration grid = zonal_equal_area_points(static_cast<int>(size));
    grid.label = "control_grid_" + std::to_string(size);
    return grid;
}

} // namespace catchmesh
