#include "tfrac/norms.hpp"

#include <fftw3.h>

#include <cmath>
#include <iostream>
#include <mutex>

namespace tfrac {

namespace {

void check_resolution(const GridFn& v, const char* who) {
    if (v.grid.N < 64) throw std::invalid_argument(std::string(who) + ": grid too coarse (N < 64)");
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::mutex g_fftw_mutex;  // FFTW planning is not thread-safe

}  // namespace

double hbeta_seminorm_fourier(const GridFn& v, double beta, int pad_factor) {
    check_resolution(v, "hbeta_seminorm_fourier");
    if (!(beta > 0.0) || beta > 1.0)
        throw std::invalid_argument("hbeta_seminorm_fourier: beta out of (0,1]");
    if (pad_factor < 4) throw std::invalid_argument("hbeta_seminorm_fourier: pad_factor < 4");

    const double scale = v.max_norm();
    if (scale > 0.0 &&
        std::max(std::abs(v[0]), std::abs(v[v.grid.N])) > 1e-8 * scale)
        std::cerr << "[tfrac] warning: zero extension introduces an endpoint jump; "
                     "the H^beta seminorm may be dominated by it\n";

    const std::size_t P = next_pow2(static_cast<std::size_t>(v.size()) * pad_factor);
    const double tau = v.grid.tau();

    std::vector<double> in(P, 0.0);
    for (int n = 0; n < v.size(); ++n) in[n] = v[n];
    std::vector<fftw_complex> out(P / 2 + 1);
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(P), in.data(), out.data(),
                                              FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }

    // F v(xi_j) ~ tau (2 pi)^{-1/2} X_j at xi_j = 2 pi j / (P tau); trapezoidal
    // sum in xi with dxi = 2 pi / (P tau) collapses to (tau / P) sum |xi|^{2b} |X|^2.
    const double dxi = 2.0 * M_PI / (P * tau);
    double acc = 0.0;
    for (std::size_t j = 1; j <= P / 2; ++j) {
        const double xi = dxi * j;
        const double mag2 = out[j][0] * out[j][0] + out[j][1] * out[j][1];
        const double w = (j == P / 2) ? 1.0 : 2.0;  // conjugate pair
        acc += w * std::pow(xi, 2.0 * beta) * mag2;
    }
    return std::sqrt(acc * tau / P);
}

double slobodeckij_seminorm(const GridFn& v, double beta) {
    check_resolution(v, "slobodeckij_seminorm");
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("slobodeckij_seminorm: beta out of (0,1)");
    const int N = v.grid.N;
    const double tau = v.grid.tau();

    // Off-diagonal part: trapezoid-in-both-variables over |s - t| >= tau.
    double acc = 0.0;
    for (int i = 0; i <= N; ++i) {
        const double wi = (i == 0 || i == N) ? 0.5 : 1.0;
        for (int j = i + 1; j <= N; ++j) {
            const double wj = (j == 0 || j == N) ? 0.5 : 1.0;
            const double diff = v[i] - v[j];
            const double gap = tau * (j - i);
            acc += 2.0 * wi * wj * diff * diff / std::pow(gap, 1.0 + 2.0 * beta);
        }
    }
    acc *= tau * tau;

    // Near-diagonal band |s-t| < tau: with v(s)-v(t) ~ v'(t)(s-t) the inner
    // integral is |v'(t)|^2 * 2 tau^{2-2 beta} / (2 - 2 beta).
    GridFn d = difference_quotient(v);
    double band = 0.0;
    for (int n = 0; n <= N; ++n) {
        const double w = (n == 0 || n == N) ? 0.5 : 1.0;
        band += w * d[n] * d[n];
    }
    band *= tau * 2.0 * std::pow(tau, 2.0 - 2.0 * beta) / (2.0 - 2.0 * beta);

    return std::sqrt(acc + band);
}

double slobodeckij_norm(const GridFn& v, double beta) {
    const double l2 = v.l2_norm();
    const double semi = slobodeckij_seminorm(v, beta);
    return std::sqrt(l2 * l2 + semi * semi);
}

double sobolev_norm(const GridFn& v, double s) {
    if (s < 0.0 || s >= 2.0) throw std::invalid_argument("sobolev_norm: s out of [0,2)");
    if (s == 0.0) return v.l2_norm();
    if (s < 1.0) return slobodeckij_norm(v, s);
    const GridFn d = difference_quotient(v);
    const double l2 = v.l2_norm();
    double dpart = (s == 1.0) ? d.l2_norm() : slobodeckij_norm(d, s - 1.0);
    return std::sqrt(l2 * l2 + dpart * dpart);
}

double vector_hbeta_norm(std::span<const GridFn> coeffs, std::span<const double> weights,
                         double beta) {
    if (coeffs.size() != weights.size())
        throw std::invalid_argument("vector_hbeta_norm: length mismatch");
    double acc = 0.0;  // fixed-order summation keeps the reduction deterministic
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (weights[k] < 0.0) throw std::invalid_argument("vector_hbeta_norm: negative weight");
        const double nk = sobolev_norm(coeffs[k], beta);
        acc += weights[k] * nk * nk;
    }
    return std::sqrt(acc);
}

}  // namespace tfrac
