#pragma once

#include "catchmesh/geometry.hpp"
#include "catchmesh/harmonics.hpp"
#include "catchmesh/mesh.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace catchmesh {

// Quadrature-style object: points plus one weight per point.
struct DiscreteMeasure {
    PointConfiguration support;
    std::vector<double> weights;
};

enum class ExtractionStrategy { qp_nnls };

struct CatchOptions {
    double tol = 1e-10;
    ExtractionStrategy strategy = ExtractionStrategy::qp_nnls;
    long max_iterations = 0;   // forwarded to the NNLS solver
};

// Compressed positive quadrature extracted from a parent mesh: at most
// (2n+1)^2 of the parent's points, weights > 0, reproducing the parent's
// equal-weight sums for every polynomial of degree <= 2n up to
// moment_residual.
struct CatchSubmesh {
    PointConfiguration points;
    std::vector<double> weights;       // same order as points, all > 0
    std::vector<int> parent_indices;   // ascending positions in the parent
    int exactness_degree = 0;          // 2n
    long parent_cardinality = 0;
    double moment_residual = 0.0;      // l2 norm of V^T u - V^T 1
    long nnls_iterations = 0;
};

// b = V^T lambda: inner products of every basis column with the discrete
// measure carrying weight lambda_i at point i.
Eigen::VectorXd moments(const VandermondeMatrix& v, std::span<const double> lambda);

// Solves nnls(V_{2n}^T, V_{2n}^T 1) on the mesh and keeps the support.
// Requires card(mesh) > (2n+1)^2, otherwise there is nothing to compress.
CatchSubmesh extract_catch_submesh(const PolynomialMesh& mesh, int n,
                                   const CatchOptions& options = {});

// Max relative error, over `trials` random coefficient vectors, of the
// compressed rule against the parent's plain sums for degree-2n
// polynomials (sums scaled by sqrt(M)*||p||_{l2(mesh)}).
double quadrature_exactness_error(const PolynomialMesh& mesh, const CatchSubmesh& sub,
                                  int trials, std::uint64_t seed);

// Max relative error of sum_j w_j p(t_j)^2 against sum_i p(x_i)^2 over
// random degree-n polynomials p.
double l2_identity_error(const PolynomialMesh& mesh, const CatchSubmesh& sub,
                         int trials, std::uint64_t seed);

// max of the two checks above with the same trial count.
double verify_exactness(const PolynomialMesh& mesh, const CatchSubmesh& sub,
                        int trials, std::uint64_t seed);

} // namespace catchmesh
