// Compares the OpenMP kernels against their serial reference implementations:
// same inputs, wall time for each, and a max-abs-difference check.

#include "catchmesh/covering.hpp"
#include "catchmesh/equal_area.hpp"
#include "catchmesh/harmonics.hpp"
#include "catchmesh/least_squares.hpp"
#include "catchmesh/mesh.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using namespace catchmesh;

namespace {

template <typename F> double timed(F&& f, double& out) {
    const double t0 = omp_get_wtime();
    out = f();
    return omp_get_wtime() - t0;
}

void report(const char* name, double serial_s, double parallel_s, double diff) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   |diff| %g\n",
                name, serial_s, parallel_s, serial_s / parallel_s, diff);
}

} // namespace

int main(int argc, char** argv) {
    int n = 14;
    if (argc > 1) n = std::atoi(argv[1]);
    if (n < 1 || n > 40) {
        std::fprintf(stderr, "usage: bench [degree 1..40]\n");
        return 2;
    }

    std::printf("degree n=%d, omp_get_max_threads()=%d\n", n, omp_get_max_threads());

    const PolynomialMesh mesh = build_optimal_mesh(n);
    const PointConfiguration probe = zonal_equal_area_points(200000);
    const PointConfiguration control = control_grid(n);
    std::printf("mesh %zu points, probe %zu, control %zu\n\n", mesh.config.size(),
                probe.size(), control.size());

    {
        double a = 0.0, b = 0.0;
        const double ts =
            timed([&] { return covering_radius_serial(mesh.config, probe).geodesic; }, a);
        const double tp =
            timed([&] { return covering_radius(mesh.config, probe).geodesic; }, b);
        report("covering radius", ts, tp, std::abs(a - b));
    }

    {
        double a = 0.0, b = 0.0;
        VandermondeMatrix vs, vp;
        const double ts = timed(
            [&] {
                vs = vandermonde_serial(mesh.config, n);
                return vs.entries.sum();
            },
            a);
        const double tp = timed(
            [&] {
                vp = vandermonde(mesh.config, n);
                return vp.entries.sum();
            },
            b);
        const double diff = (vs.entries - vp.entries).cwiseAbs().maxCoeff();
        report("vandermonde", ts, tp, diff);
    }

    {
        const std::vector<double> ones(mesh.config.size(), 1.0);
        double a = 0.0, b = 0.0;
        const double ts = timed(
            [&] { return ls_operator_norm_serial(mesh.config, ones, n, control); }, a);
        const double tp =
            timed([&] { return ls_operator_norm(mesh.config, ones, n, control); }, b);
        report("operator norm", ts, tp, std::abs(a - b));
    }

    {
        std::vector<double> samples(mesh.config.size());
        for (std::size_t i = 0; i < mesh.config.size(); ++i)
            samples[i] = test_function(2, mesh.config.points[i]);
        const HarmonicCoefficients c = unweighted_ls_fit(mesh.config, n, samples);
        const auto f = [](const SpherePoint& p) { return test_function(2, p); };
        double a = 0.0, b = 0.0;
        const double ts = timed([&] { return sup_error_serial(c, f, control); }, a);
        const double tp = timed([&] { return sup_error(c, f, control); }, b);
        report("sup error scan", ts, tp, std::abs(a - b));
    }

    return 0;
}
