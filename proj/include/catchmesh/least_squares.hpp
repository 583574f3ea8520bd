#pragma once

#include "catchmesh/errors.hpp"
#include "catchmesh/geometry.hpp"

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace catchmesh {

struct HarmonicCoefficients {
    Eigen::VectorXd coeffs;   // linear basis order, length (degree+1)^2
    int degree = 0;
};

enum class FitMethod { full_mesh_ls, catch_weighted_ls };

struct FitReport {
    int degree = 0;
    FitMethod method = FitMethod::full_mesh_ls;
    double sup_error = 0.0;
    double operator_norm = 0.0;
    double condition_estimate = 0.0;
    std::optional<long> catch_cardinality;
    std::optional<double> compression_ratio;
};

// Weighted least squares in the harmonic basis: minimizes
// sum_i w_i (p(x_i) - f_i)^2 via column-pivoted QR of diag(sqrt(w)) V.
// Throws numerical_error if the scaled Vandermonde is rank deficient.
HarmonicCoefficients weighted_ls_fit(const PointConfiguration& pts,
                                     std::span<const double> weights, int n,
                                     std::span<const double> samples);
HarmonicCoefficients unweighted_ls_fit(const PointConfiguration& pts, int n,
                                       std::span<const double> samples);

std::vector<double> evaluate_poly(const HarmonicCoefficients& coeffs,
                                  const PointConfiguration& pts);

// Operator norm of the weighted LS projection, estimated as the max over
// the control grid of the Lebesgue function
//   Lambda(x) = sum_i w_i |K(x, x_i)|,
// K the reproducing kernel of the fitted space under the discrete inner
// product.  Computed from an orthonormalization of diag(sqrt(w)) V, never
// from normal equations.
double ls_operator_norm(const PointConfiguration& pts, std::span<const double> weights,
                        int n, const PointConfiguration& control);
double ls_operator_norm_serial(const PointConfiguration& pts,
                               std::span<const double> weights, int n,
                               const PointConfiguration& control);

// Built-in targets for experiments:
//  1: (x+y+z)^15, a degree-15 polynomial
//  2: exp(x+y+z)/10, entire
//  3: (|x|+|y|+|z|)/10, non-smooth along great circles
double test_function(int id, const SpherePoint& p);

// max_i |f(x_i) - p(x_i)| over the control grid.
double sup_error(const HarmonicCoefficients& coeffs,
                 const std::function<double(const SpherePoint&)>& f,
                 const PointConfiguration& control);
double sup_error_serial(const HarmonicCoefficients& coeffs,
                        const std::function<double(const SpherePoint&)>& f,
                        const PointConfiguration& control);

// Equal-area evaluation grid; `requested` overrides the default size
// max(100*(n+1)^2, 50000).
PointConfiguration control_grid(int n, long requested = 0);

} // namespace catchmesh
