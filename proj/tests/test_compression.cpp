#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catchmesh/compression.hpp"
#include "catchmesh/equal_area.hpp"
#include "catchmesh/nnls.hpp"
#include "support.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace catchmesh;

TEST_CASE("moments of the counting measure") {
    const PointConfiguration cfg = zonal_equal_area_points(100);
    const VandermondeMatrix v = vandermonde(cfg, 3);
    const std::vector<double> ones(100, 1.0);
    const Eigen::VectorXd b = moments(v, ones);
    REQUIRE(b.size() == basis_dimension(3));
    // Row sums, column by column.
    for (int j = 0; j < b.size(); ++j)
        CHECK(b[j] == doctest::Approx(v.entries.col(j).sum()).epsilon(1e-14));
    // Constant harmonic: M * Y00.
    CHECK(b[0] == doctest::Approx(100.0 / std::sqrt(4.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("extraction hits the dimension bound at moderate degree") {
    for (int n : {2, 5, 8}) {
        const PolynomialMesh mesh = build_optimal_mesh(n);
        const CatchSubmesh sub = extract_catch_submesh(mesh, n);
        const long bound = (2L * n + 1) * (2L * n + 1);
        CHECK(static_cast<long>(sub.weights.size()) == bound);
        CHECK(sub.exactness_degree == 2 * n);
        CHECK(sub.parent_cardinality == static_cast<long>(mesh.config.size()));

        double mass = 0.0, w_max = 0.0;
        for (double w : sub.weights) {
            CHECK(w > 0.0);
            mass += w;
            w_max = std::max(w_max, w);
        }
        const double m = static_cast<double>(mesh.config.size());
        CHECK(std::abs(mass - m) <= 1e-8 * m);
        const double w_avg = mass / static_cast<double>(sub.weights.size());
        CHECK(w_max / w_avg >= 1.5);
        CHECK(w_max / w_avg <= 4.0);

        // parent_indices ascending, consistent with points.
        for (std::size_t k = 1; k < sub.parent_indices.size(); ++k)
            CHECK(sub.parent_indices[k] > sub.parent_indices[k - 1]);
        for (std::size_t k = 0; k < sub.parent_indices.size(); k += 37)
            CHECK(sub.points.points[k].x ==
                  mesh.config.points[sub.parent_indices[k]].x);

        CHECK(sub.moment_residual <= 1e-8);
    }
}

TEST_CASE("compressed rule reproduces parent sums") {
    for (int n : {2, 5}) {
        const PolynomialMesh mesh = build_optimal_mesh(n);
        const CatchSubmesh sub = extract_catch_submesh(mesh, n);
        CHECK(quadrature_exactness_error(mesh, sub, 100, 99) <= 1e-8);
        CHECK(l2_identity_error(mesh, sub, 100, 99) <= 1e-8);
        CHECK(verify_exactness(mesh, sub, 100, 99) <= 1e-8);
    }
}

TEST_CASE("extraction respects a rotated basis") {
    // Compressing in a rotated frame must still produce a valid positive
    // rule for the original moments: rotate the mesh, extract, rotate back.
    std::mt19937_64 rng(17);
    const Eigen::Matrix3d rot = testsupport::random_rotation(rng);
    const int n = 3;
    const PolynomialMesh mesh = build_optimal_mesh(n);

    PolynomialMesh rotated = mesh;
    for (SpherePoint& p : rotated.config.points) p = testsupport::rotate(rot, p);

    const CatchSubmesh sub = extract_catch_submesh(rotated, n, {});
    CHECK(static_cast<long>(sub.weights.size()) <= (2L * n + 1) * (2L * n + 1));
    CHECK(verify_exactness(rotated, sub, 100, 5) <= 1e-8);
}

TEST_CASE("preconditions") {
    const PolynomialMesh mesh = build_optimal_mesh(2);   // 181 points
    CHECK_THROWS_AS(extract_catch_submesh(mesh, 0), std::invalid_argument);
    // (2*7+1)^2 = 225 > 181: nothing to compress.
    CHECK_THROWS_AS(extract_catch_submesh(mesh, 7), std::invalid_argument);
}

TEST_CASE("iteration cap propagates as a numerical failure") {
    const PolynomialMesh mesh = build_optimal_mesh(2);
    CatchOptions opt;
    opt.max_iterations = 2;   // needs 25 insertions
    CHECK_THROWS_AS(extract_catch_submesh(mesh, 2, opt), numerical_error);
}
