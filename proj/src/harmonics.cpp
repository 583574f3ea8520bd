#include "catchmesh/harmonics.hpp"

#include <cmath>
#include <stdexcept>

namespace catchmesh {

long linear_index(int l, int m) {
    if (l < 0 || m < -l || m > l)
        throw std::invalid_argument("linear_index: need l >= 0, |m| <= l");
    return static_cast<long>(l) * l + l + m;
}

BasisIndex basis_index_from_linear(long k) {
    if (k < 0)
        throw std::invalid_argument("basis_index_from_linear: negative index");
    long l = static_cast<long>(std::sqrt(static_cast<double>(k)));
    // Guard the floor against roundoff at perfect squares.
    while (l * l > k) --l;
    while ((l + 1) * (l + 1) <= k) ++l;
    BasisIndex idx;
    idx.l = static_cast<int>(l);
    idx.m = static_cast<int>(k - l * l - l);
    return idx;
}

namespace detail {

void eval_basis_unchecked(double x, double y, double z, int n, double* out) {
    const double t = z;
    const double s = std::sqrt(x * x + y * y);
    const double phi = std::atan2(y, x);

    constexpr double inv_sqrt_4pi = 0.28209479177387814;   // 1/sqrt(4*pi)
    const double sqrt2 = std::sqrt(2.0);

    // Fully normalized associated Legendre chain, order-major: for each m
    // the sectoral seed, the single-step band, then the three-term climb.
    double pmm = inv_sqrt_4pi;
    for (int m = 0; m <= n; ++m) {
        if (m > 0)
            pmm *= s * std::sqrt((2.0 * m + 1.0) / (2.0 * m));

        double cm = 1.0, sm = 0.0;
        if (m > 0) {
            cm = std::cos(m * phi);
            sm = std::sin(m * phi);
        }
        const auto store = [&](int l, double pbar) {
            const long base = static_cast<long>(l) * l + l;
            if (m == 0) {
                out[base] = pbar;
            } else {
                const double f = sqrt2 * pbar;
                out[base + m] = f * cm;
                out[base - m] = f * sm;
            }
        };

        store(m, pmm);
        if (m == n) continue;

        double prev2 = pmm;                                   // Pbar_{l-2}^m
        double prev1 = t * std::sqrt(2.0 * m + 3.0) * pmm;    // Pbar_{l-1}^m
        store(m + 1, prev1);

        for (int l = m + 2; l <= n; ++l) {
            const double lm = static_cast<double>(l - m);
            const double lp = static_cast<double>(l + m);
            const double alpha =
                std::sqrt((2.0 * l - 1.0) * (2.0 * l + 1.0) / (lm * lp));
            const double beta =
                std::sqrt((2.0 * l + 1.0) * (l - 1.0 - m) * (l - 1.0 + m) /
                          ((2.0 * l - 3.0) * lm * lp));
            const double cur = alpha * t * prev1 - beta * prev2;
            store(l, cur);
            prev2 = prev1;
            prev1 = cur;
        }
    }
}

} // namespace detail

namespace {

void check_point(const SpherePoint& p) {
    if (std::abs(p.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("eval_basis: point is not on the unit sphere");
}

} // namespace

void eval_basis(const SpherePoint& p, int n, std::span<double> out) {
    if (n < 0)
        throw std::invalid_argument("eval_basis: negative degree");
    check_point(p);
    if (out.size() < static_cast<std::size_t>(basis_dimension(n)))
        throw std::invalid_argument("eval_basis: output span too small");
    detail::eval_basis_unchecked(p.x, p.y, p.z, n, out.data());
}

std::vector<double> eval_basis(const SpherePoint& p, int n) {
    if (n < 0)
        throw std::invalid_argument("eval_basis: negative degree");
    std::vector<double> out(static_cast<std::size_t>(basis_dimension(n)));
    eval_basis(p, n, out);
    return out;
}

namespace {

void check_vandermonde_args(const PointConfiguration& cfg, int n) {
    if (n < 0)
        throw std::invalid_argument("vandermonde: negative degree");
    if (cfg.size() == 0)
        throw std::invalid_argument("vandermonde: empty configuration");
    for (const SpherePoint& p : cfg.points) check_point(p);
}

} // namespace

VandermondeMatrix vandermonde(const PointConfiguration& cfg, int n) {
    check_vandermonde_args(cfg, n);
    const long m = static_cast<long>(cfg.size());
    const long cols = basis_dimension(n);

    VandermondeMatrix v;
    v.degree = n;
    v.config_label = cfg.label;
    v.entries.resize(m, cols);

#pragma omp parallel for schedule(static)
    for (long i = 0; i < m; ++i) {
        const SpherePoint& p = cfg.points[i];
        detail::eval_basis_unchecked(p.x, p.y, p.z, n, v.entries.row(i).data());
    }
    return v;
}

VandermondeMatrix vandermonde_serial(const PointConfiguration& cfg, int n) {
    check_vandermonde_args(cfg, n);
    const long m = static_cast<long>(cfg.size());
    const long cols = basis_dimension(n);

    VandermondeMatrix v;
    v.degree = n;
    v.config_label = cfg.label;
    v.entries.resize(m, cols);

    for (long i = 0; i < m; ++i) {
        const SpherePoint& p = cfg.points[i];
        detail::eval_basis_unchecked(p.x, p.y, p.z, n, v.entries.row(i).data());
    }
    return v;
}

} // namespace catchmesh
