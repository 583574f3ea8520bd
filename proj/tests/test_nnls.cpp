#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catchmesh/nnls.hpp"
#include "support.hpp"

#include <random>
#include <stdexcept>

using namespace catchmesh;

TEST_CASE("unconstrained optimum already feasible") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd b(2);
    b << 1.0, 2.0;
    const NnlsSolution s = nnls(a, b);
    CHECK(s.u[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.u[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s.residual_norm == doctest::Approx(0.0).epsilon(1e-14));
    REQUIRE(s.passive_set.size() == 2);
    CHECK(s.passive_set[0] == 0);
    CHECK(s.passive_set[1] == 1);
    CHECK(s.iterations == 2);
}

TEST_CASE("ties resolve to the lowest index") {
    Eigen::MatrixXd a(1, 2);
    a << 1.0, 1.0;
    Eigen::VectorXd b(1);
    b << 3.0;
    const NnlsSolution s = nnls(a, b);
    CHECK(s.u[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(s.u[1] == 0.0);
    REQUIRE(s.passive_set.size() == 1);
    CHECK(s.passive_set[0] == 0);
}

TEST_CASE("all-negative correlation leaves zero") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd b(2);
    b << -1.0, -1.0;
    const NnlsSolution s = nnls(a, b);
    CHECK(s.u.isZero(0.0));
    CHECK(s.passive_set.empty());
    CHECK(s.residual_norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("KKT certificate on random rectangular instances") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 10);
        const int n = 2 + static_cast<int>(rng() % 6);
        Eigen::MatrixXd a(m, n);
        Eigen::VectorXd b(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
            b[i] = gauss(rng);
        }
        const NnlsSolution s = nnls(a, b);
        CHECK((s.u.array() >= 0.0).all());
        const Eigen::VectorXd w = a.transpose() * (b - a * s.u);
        const double scale = (a.transpose() * b).cwiseAbs().maxCoeff() + 1.0;
        for (int j = 0; j < n; ++j) {
            CHECK(w[j] <= 1e-8 * scale);               // no profitable entry
            if (s.u[j] > 0.0) CHECK(std::abs(w[j]) <= 1e-8 * scale);
        }
        for (std::size_t k = 1; k < s.passive_set.size(); ++k)
            CHECK(s.passive_set[k] > s.passive_set[k - 1]);
    }
}

TEST_CASE("matches brute-force support enumeration") {
    std::mt19937_64 rng(1234);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 11);   // up to 12 rows
        const int n = 1 + static_cast<int>(rng() % 6);    // up to 6 cols
        Eigen::MatrixXd a(m, n);
        Eigen::VectorXd b(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
            b[i] = gauss(rng);
        }
        const NnlsSolution s = nnls(a, b);
        const testsupport::BruteForceNnls oracle = testsupport::brute_force_nnls(a, b);
        CHECK(s.residual_norm == doctest::Approx(oracle.residual_norm).epsilon(1e-9));
        // The minimizer need not be unique (underdetermined instances), but
        // the fitted vector A u is.
        CHECK((a * (s.u - oracle.u)).norm() <= 1e-7);
    }
}

TEST_CASE("degenerate columns do not break the active set") {
    // Second column duplicates the first: at most one of them can enter.
    Eigen::MatrixXd a(3, 3);
    a << 1, 1, 0, 1, 1, 0, 0, 0, 1;
    Eigen::VectorXd b(3);
    b << 2, 2, 1;
    const NnlsSolution s = nnls(a, b);
    CHECK(s.residual_norm == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.u[0] + s.u[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.u[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("input validation") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd b3 = Eigen::VectorXd::Ones(3);
    CHECK_THROWS_AS(nnls(a, b3), std::invalid_argument);
    Eigen::VectorXd b2 = Eigen::VectorXd::Ones(2);
    a(0, 0) = std::nan("");
    CHECK_THROWS_AS(nnls(a, b2), std::invalid_argument);
    a(0, 0) = 1.0;
    b2[0] = std::nan("");
    CHECK_THROWS_AS(nnls(a, b2), std::invalid_argument);
    b2[0] = 1.0;
    CHECK_THROWS_AS(nnls(a, b2, -1.0), std::invalid_argument);
}

TEST_CASE("iteration cap raises and carries the best effort") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd b(2);
    b << 1.0, 2.0;
    NnlsOptions opt;
    opt.max_iterations = 1;
    bool thrown = false;
    try {
        nnls(a, b, opt);
    } catch (const nnls_convergence_error& e) {
        thrown = true;
        // The largest dual (index 1) entered before the cap tripped on the
        // second insertion, so the best effort carries u = (0, 2).
        CHECK(e.best.u[1] == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(e.best.residual_norm == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(e.best.iterations > opt.max_iterations);
    }
    CHECK(thrown);
}
