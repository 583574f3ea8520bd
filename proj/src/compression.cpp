#include "catchmesh/compression.hpp"

#include "catchmesh/errors.hpp"
#include "catchmesh/nnls.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace catchmesh {

Eigen::VectorXd moments(const VandermondeMatrix& v, std::span<const double> lambda) {
    if (static_cast<long>(lambda.size()) != v.entries.rows())
        throw std::invalid_argument("moments: weight count does not match point count");
    const Eigen::Map<const Eigen::VectorXd> lam(lambda.data(),
                                                static_cast<long>(lambda.size()));
    return v.entries.transpose() * lam;
}

CatchSubmesh extract_catch_submesh(const PolynomialMesh& mesh, int n,
                                   const CatchOptions& options) {
    if (n < 1)
        throw std::invalid_argument("extract_catch_submesh: degree must be >= 1");
    if (options.strategy != ExtractionStrategy::qp_nnls)
        throw std::invalid_argument("extract_catch_submesh: unknown strategy");

    const int nu = 2 * n;
    const long cols = basis_dimension(nu);           // (2n+1)^2
    const long m = static_cast<long>(mesh.config.size());
    if (m <= cols)
        throw std::invalid_argument(
            "extract_catch_submesh: mesh cardinality must exceed (2n+1)^2, "
            "nothing to compress");

    const VandermondeMatrix v = vandermonde(mesh.config, nu);

    // Moment system V^T u = V^T 1 in u >= 0: the NNLS residual drives the
    // dual objective, and the optimum's support is the compressed rule.
    // Row-major M x N storage read column-major IS the transpose; no copy.
    const Eigen::Map<const Eigen::MatrixXd> vt(v.entries.data(), cols, m);
    const Eigen::VectorXd b = v.entries.colwise().sum().transpose();

    NnlsOptions nnls_options;
    nnls_options.tol = options.tol;
    nnls_options.max_iterations = options.max_iterations;
    const NnlsSolution sol = nnls(vt, b, nnls_options);

    CatchSubmesh sub;
    sub.exactness_degree = nu;
    sub.parent_cardinality = m;
    sub.moment_residual = sol.residual_norm;
    sub.nnls_iterations = sol.iterations;
    sub.points.label = mesh.config.label + "_catch_deg" + std::to_string(nu);
    for (int j : sol.passive_set) {
        if (sol.u[j] <= 0.0) continue;   // defensive; support entries are positive
        sub.points.points.push_back(mesh.config.points[j]);
        sub.weights.push_back(sol.u[j]);
        sub.parent_indices.push_back(j);
    }
    if (sub.points.points.empty())
        throw numerical_error("extract_catch_submesh: empty support");
    return sub;
}

namespace {

Eigen::VectorXd random_coefficients(long dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd c(dim);
    for (long i = 0; i < dim; ++i) c[i] = gauss(rng);
    return c;
}

} // namespace

double quadrature_exactness_error(const PolynomialMesh& mesh, const CatchSubmesh& sub,
                                  int trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("quadrature_exactness_error: need trials >= 1");
    const int nu = sub.exactness_degree;
    const long dim = basis_dimension(nu);
    const double m = static_cast<double>(mesh.config.size());

    const VandermondeMatrix v_mesh = vandermonde(mesh.config, nu);
    const VandermondeMatrix v_sub = vandermonde(sub.points, nu);
    const Eigen::VectorXd b_mesh = v_mesh.entries.colwise().sum().transpose();
    const Eigen::VectorXd b_sub = moments(v_sub, sub.weights);

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Eigen::VectorXd c = random_coefficients(dim, rng);
        const double plain_sum = b_mesh.dot(c);
        const double weighted_sum = b_sub.dot(c);
        // Scale-aware denominator: |sum_i p(x_i)| <= sqrt(M) * ||p||_{l2(mesh)}.
        const double denom = std::sqrt(m) * (v_mesh.entries * c).norm();
        if (denom == 0.0) continue;
        worst = std::max(worst, std::abs(plain_sum - weighted_sum) / denom);
    }
    return worst;
}

double l2_identity_error(const PolynomialMesh& mesh, const CatchSubmesh& sub,
                         int trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("l2_identity_error: need trials >= 1");
    const int n = sub.exactness_degree / 2;
    const long dim = basis_dimension(n);

    const VandermondeMatrix v_mesh = vandermonde(mesh.config, n);
    const VandermondeMatrix v_sub = vandermonde(sub.points, n);
    const Eigen::Map<const Eigen::VectorXd> w(sub.weights.data(),
                                              static_cast<long>(sub.weights.size()));

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Eigen::VectorXd c = random_coefficients(dim, rng);
        const double mesh_sq = (v_mesh.entries * c).squaredNorm();
        const Eigen::VectorXd vals = v_sub.entries * c;
        const double sub_sq = vals.array().square().matrix().dot(w);
        if (mesh_sq == 0.0) continue;
        worst = std::max(worst, std::abs(mesh_sq - sub_sq) / mesh_sq);
    }
    return worst;
}

double verify_exactness(const PolynomialMesh& mesh, const CatchSubmesh& sub,
                        int trials, std::uint64_t seed) {
    return std::max(quadrature_exactness_error(mesh, sub, trials, seed),
                    l2_identity_error(mesh, sub, trials, seed + 1));
}

} // namespace catchmesh
