#pragma once

#include "catchmesh/errors.hpp"

#include <Eigen/Core>

#include <vector>

namespace catchmesh {

// Lawson-Hanson active-set solver for min ||A u - b||_2 s.t. u >= 0.
//
// Stationarity is declared when every dual component A^T (b - A u) on the
// zero set is <= tol * ||A^T b||_inf.  Ties in the entering-variable
// selection break toward the lowest column index, which makes runs
// reproducible bit for bit.  The passive-set factorization is an updating
// Householder QR: column insertions cost O(rows * passive), removals
// trigger a rebuild (they are rare in practice).
struct NnlsOptions {
    double tol = 1e-10;
    long max_iterations = 0;   // 0 means 10 * rows
};

struct NnlsSolution {
    Eigen::VectorXd u;             // length cols, entries >= 0
    double residual_norm = 0.0;    // ||A u - b||_2
    std::vector<int> passive_set;  // support indices, ascending
    long iterations = 0;           // outer iterations consumed
};

NnlsSolution nnls(const Eigen::Ref<const Eigen::MatrixXd>& A,
                  const Eigen::Ref<const Eigen::VectorXd>& b,
                  const NnlsOptions& options = {});
NnlsSolution nnls(const Eigen::Ref<const Eigen::MatrixXd>& A,
                  const Eigen::Ref<const Eigen::VectorXd>& b, double tol);

// Thrown when the iteration cap is hit; carries the best iterate found so
// callers can inspect how far the solve got.
class nnls_convergence_error : public numerical_error {
public:
    nnls_convergence_error(const std::string& what, NnlsSolution best_iterate)
        : numerical_error(what), best(std::move(best_iterate)) {}

    NnlsSolution best;
};

} // namespace catchmesh
