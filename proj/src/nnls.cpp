#include "catchmesh/nnls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace catchmesh {

namespace {

// QR factorization of the passive columns, maintained incrementally.
// Householder vectors are kept LAPACK-style (unit leading entry, stored
// tail), so inserting a column costs O(rows * passive) and the triangular
// factor grows in place.  Removals replay the surviving columns; they are
// rare enough that the rebuild never dominates.
class PassiveQr {
public:
    PassiveQr(const Eigen::Ref<const Eigen::MatrixXd>& a,
              const Eigen::Ref<const Eigen::VectorXd>& b)
        : a_(a), b_(b), n_(a.rows()), cap_(std::min(a.rows(), a.cols())) {
        h_.resize(n_, cap_);
        hbeta_.resize(cap_);
        r_.resize(cap_, cap_);
        qtb_ = b_;
    }

    int size() const { return static_cast<int>(cols_.size()); }
    const std::vector<int>& cols() const { return cols_; }

    // Tries to append column j.  Fails (state untouched) when the column
    // is numerically dependent on the passive set or when its provisional
    // coefficient would not be positive.
    bool insert(int j) {
        const int p = size();
        Eigen::VectorXd v = a_.col(j);
        apply_chain(v);

        const double tail_norm = v.tail(n_ - p).norm();
        if (tail_norm <= 100.0 * std::numeric_limits<double>::epsilon() * a_.col(j).norm())
            return false;

        double beta = 0.0, rdiag = 0.0;
        make_householder(v, p, beta, rdiag);

        // Provisional value of the entering coefficient: back substitution
        // touches only the last row, qtb'[p] / R[p][p].
        const double s = beta * v.tail(n_ - p).dot(qtb_.tail(n_ - p));
        const double qtb_p = qtb_[p] - s;
        if (!(qtb_p / rdiag > 0.0))
            return false;

        commit(j, v, beta, rdiag, s);
        return true;
    }

    // Drops the passive columns at the given positions (ascending) and
    // replays the rest.  Survivors are re-inserted unconditionally: a
    // subset of an independent set stays independent.
    void remove_positions(const std::vector<int>& positions) {
        std::vector<int> keep;
        keep.reserve(cols_.size());
        std::size_t next = 0;
        for (int k = 0; k < size(); ++k) {
            if (next < positions.size() && positions[next] == k) {
                ++next;
                continue;
            }
            keep.push_back(cols_[k]);
        }
        cols_.clear();
        qtb_ = b_;
        for (int j : keep) {
            Eigen::VectorXd v = a_.col(j);
            apply_chain(v);
            const int p = size();
            double beta = 0.0, rdiag = 0.0;
            make_householder(v, p, beta, rdiag);
            const double s = beta * v.tail(n_ - p).dot(qtb_.tail(n_ - p));
            commit(j, v, beta, rdiag, s);
        }
    }

    // Solves R z = Q^T b on the passive block.
    Eigen::VectorXd solve() const {
        const int p = size();
        Eigen::VectorXd z = qtb_.head(p);
        r_.topLeftCorner(p, p).triangularView<Eigen::Upper>().solveInPlace(z);
        return z;
    }

private:
    void apply_chain(Eigen::VectorXd& v) const {
        for (int k = 0; k < size(); ++k) {
            const auto hk = h_.col(k).tail(n_ - k);
            const double s = hbeta_[k] * hk.dot(v.tail(n_ - k));
            v.tail(n_ - k) -= s * hk;
        }
    }

    // Reflector zeroing v[p+1..] into v[p]; positive resulting diagonal.
    static void make_householder(Eigen::VectorXd& v, int p, double& beta, double& rdiag) {
        const int tail = static_cast<int>(v.size()) - p - 1;
        const double x1 = v[p];
        const double sigma = tail > 0 ? v.tail(tail).squaredNorm() : 0.0;
        if (sigma == 0.0) {
            beta = 0.0;
            rdiag = x1;
            v[p] = 1.0;
            return;
        }
        const double mu = std::sqrt(x1 * x1 + sigma);
        const double v1 = (x1 <= 0.0) ? x1 - mu : -sigma / (x1 + mu);
        beta = 2.0 * v1 * v1 / (sigma + v1 * v1);
        v.tail(tail) /= v1;
        v[p] = 1.0;
        rdiag = mu;
    }

    void commit(int j, const Eigen::VectorXd& v, double beta, double rdiag, double s) {
        const int p = size();
        r_.col(p).head(p) = v.head(p);
        r_(p, p) = rdiag;
        h_.col(p).setZero();
        h_.col(p).tail(n_ - p) = v.tail(n_ - p);
        hbeta_[p] = beta;
        qtb_.tail(n_ - p) -= s * v.tail(n_ - p);
        cols_.push_back(j);
    }

    Eigen::Ref<const Eigen::MatrixXd> a_;
    Eigen::Ref<const Eigen::VectorXd> b_;
    long n_;
    long cap_;
    std::vector<int> cols_;
    Eigen::MatrixXd h_;
    Eigen::VectorXd hbeta_;
    Eigen::MatrixXd r_;
    Eigen::VectorXd qtb_;
};

} // namespace

NnlsSolution nnls(const Eigen::Ref<const Eigen::MatrixXd>& a,
                  const Eigen::Ref<const Eigen::VectorXd>& b,
                  const NnlsOptions& options) {
    const long n = a.rows();
    const long m = a.cols();
    if (n < 1 || m < 1)
        throw std::invalid_argument("nnls: empty system");
    if (b.size() != n)
        throw std::invalid_argument("nnls: dimension mismatch between A and b");
    if (!a.allFinite() || !b.allFinite())
        throw std::invalid_argument("nnls: non-finite input");
    if (!(options.tol > 0.0))
        throw std::invalid_argument("nnls: tolerance must be positive");

    const long itmax = options.max_iterations > 0 ? options.max_iterations : 10 * n;
    const double scale = (a.transpose() * b).lpNorm<Eigen::Infinity>();
    const double threshold = options.tol * scale;

    Eigen::VectorXd u = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd r = b;
    std::vector<char> in_passive(m, 0);
    PassiveQr qr(a, b);
    long iterations = 0;

    const auto finalize = [&]() {
        NnlsSolution sol;
        sol.u = u;
        Eigen::VectorXd res = b;
        for (int j : qr.cols()) res -= u[j] * a.col(j);
        sol.residual_norm = res.norm();
        sol.passive_set = qr.cols();
        std::sort(sol.passive_set.begin(), sol.passive_set.end());
        sol.iterations = iterations;
        return sol;
    };

    while (true) {
        if (qr.size() == std::min(n, m)) break;

        const Eigen::VectorXd w = a.transpose() * r;

        // Entering variable: largest positive dual, lowest index on ties.
        // Candidates that fail the insertion guards are struck for this
        // dual pass only.
        std::vector<char> struck(m, 0);
        int entered = -1;
        while (true) {
            int best = -1;
            double wmax = threshold;
            for (long j = 0; j < m; ++j) {
                if (in_passive[j] || struck[j]) continue;
                if (w[j] > wmax) {
                    wmax = w[j];
                    best = static_cast<int>(j);
                }
            }
            if (best < 0) break;
            if (qr.insert(best)) {
                entered = best;
                break;
            }
            struck[best] = 1;
        }
        if (entered < 0) break;   // stationary: no admissible positive dual

        in_passive[entered] = 1;
        if (++iterations > itmax)
            throw nnls_convergence_error("nnls: iteration limit exceeded", finalize());

        Eigen::VectorXd z = qr.solve();

        // Feasibility restoration: step toward z as far as nonnegativity
        // allows, drop the variables pinned at zero, re-solve.
        while (z.minCoeff() <= 0.0) {
            const auto step_to_zero = [](double uk, double zk) {
                const double denom = uk - zk;
                return denom > 0.0 ? uk / denom : 0.0;
            };

            double alpha = std::numeric_limits<double>::infinity();
            for (int k = 0; k < qr.size(); ++k) {
                if (z[k] > 0.0) continue;
                alpha = std::min(alpha, step_to_zero(u[qr.cols()[k]], z[k]));
            }

            std::vector<int> drop;
            for (int k = 0; k < qr.size(); ++k) {
                const int j = qr.cols()[k];
                const double uk = u[j];
                if (z[k] <= 0.0 && step_to_zero(uk, z[k]) <= alpha * (1.0 + 1e-10)) {
                    u[j] = 0.0;
                    in_passive[j] = 0;
                    drop.push_back(k);
                } else {
                    u[j] = uk + alpha * (z[k] - uk);
                }
            }
            qr.remove_positions(drop);

            if (++iterations > itmax)
                throw nnls_convergence_error("nnls: iteration limit exceeded", finalize());
            if (qr.size() == 0) break;
            z = qr.solve();
        }

        for (int k = 0; k < qr.size(); ++k) u[qr.cols()[k]] = z[k];

        r = b;
        for (int k = 0; k < qr.size(); ++k) r -= z[k] * a.col(qr.cols()[k]);
    }

    return finalize();
}

NnlsSolution nnls(const Eigen::Ref<const Eigen::MatrixXd>& a,
                  const Eigen::Ref<const Eigen::VectorXd>& b, double tol) {
    NnlsOptions options;
    options.tol = tol;
    return nnls(a, b, options);
}

} // namespace catchmesh
