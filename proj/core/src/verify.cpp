#include "tfrac/verify.hpp"

#include "tfrac/frac_ops.hpp"
#include "tfrac/norms.hpp"
#include "tfrac/special.hpp"
#include "tfrac/testfns.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

namespace tfrac {

namespace {

constexpr double kGaussX[4] = {0.06943184420297371, 0.33000947820757187,
                               0.6699905217924281, 0.9305681557970263};
constexpr double kGaussW[4] = {0.17392742256872693, 0.32607257743127305,
                               0.32607257743127305, 0.17392742256872693};

double rel_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

double l2_rel_error(const GridFn& got, const GridFn& want) {
    GridFn diff(got.grid);
    for (int n = 0; n <= got.grid.N; ++n) diff[n] = got[n] - want[n];
    const double denom = want.l2_norm();
    return denom > 0.0 ? diff.l2_norm() / denom : diff.l2_norm();
}

}  // namespace

SuiteResult suite_semigroup(int N) {
    const TimeGrid grid(1.0, N);
    const double orders[3][2] = {{0.3, 0.4}, {0.25, 0.5}, {0.45, 0.45}};
    double worst = 0.0;
    for (auto [b, g] : orders) {
        for (double mu : {1.0, 2.0}) {
            const GridFn v = GridFn::sample(grid, [mu](double t) { return std::pow(t, mu); });
            const GridFn composed = frac_integral_left(frac_integral_left(v, g), b);
            const GridFn direct = frac_integral_left(v, b + g);
            worst = std::max(worst, l2_rel_error(composed, direct));
        }
    }
    return {"semigroup", worst, 1e-3, worst <= 1e-3, "I^b I^g vs I^{b+g} on monomials, L2-grid"};
}

SuiteResult suite_adjoint(std::uint64_t seed, int N) {
    const TimeGrid grid(1.0, N);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const GridFn u = GridFn::sample(grid, seeded_polynomial(seed * 1000 + 2 * i, 1.0));
        const GridFn v = GridFn::sample(grid, seeded_polynomial(seed * 1000 + 2 * i + 1, 1.0));
        for (double b : {0.3, 0.5, 0.7}) {
            const double lhs = inner_product(frac_integral_left(u, b), v);
            const double rhs = inner_product(u, frac_integral_right(v, b));
            // Bilinear identity: the pairing itself can nearly vanish for an
            // unlucky pair, so the Cauchy-Schwarz scale backstops the denominator.
            const double scale =
                std::max({std::abs(lhs), std::abs(rhs), u.l2_norm() * v.l2_norm()});
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    return {"adjoint", worst, 1e-3, worst <= 1e-3, "(I+ u, v) vs (u, I- v), seeded polynomials"};
}

SuiteResult suite_coercivity(std::uint64_t seed, double alpha, int N) {
    const double T = 1.0;
    const TimeGrid grid(T, N);
    const double target = std::cos(alpha * M_PI / 2.0);
    double worst = 0.0;
    for (const SineBump& b : sine_bump_family(seed, 10, T)) {
        const GridFn v = GridFn::sample(grid, [&](double t) { return b(t); });
        const GridFn dl = frac_deriv_left(v, alpha / 2.0);
        const GridFn dr = frac_deriv_right(v, alpha / 2.0);
        const double pairing = inner_product(dl, dr);
        const double semi = hbeta_seminorm_fourier(v, alpha / 2.0);
        const double measured = pairing / (semi * semi);
        worst = std::max(worst, std::abs(measured - target) / target);
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "alpha=%.2f, target cos(a pi/2)=%.7f", alpha, target);
    return {"coercivity", worst, 0.05, worst <= 0.05, detail};
}

SuiteResult suite_dalpha(std::uint64_t seed, double alpha, int N) {
    const double T = 1.0;
    const TimeGrid grid(T, N);
    const auto family = sine_bump_family(seed, 20, T);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const GridFn v = GridFn::sample(grid, [&](double t) { return family[2 * i](t); });
        const GridFn phi = GridFn::sample(grid, [&](double t) { return family[2 * i + 1](t); });
        const double lhs = inner_product(frac_deriv_left(v, alpha), phi);
        const GridFn dv = frac_deriv_left(v, alpha / 2.0);
        const GridFn dphi = frac_deriv_right(phi, alpha / 2.0);
        const double rhs = inner_product(dv, dphi);
        // Same normalization as the adjoint suite: the pairing can nearly
        // vanish, so the Cauchy-Schwarz scale backstops the denominator.
        const double scale =
            std::max({std::abs(lhs), std::abs(rhs), dv.l2_norm() * dphi.l2_norm()});
        worst = std::max(worst, scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0);
    }
    return {"dalpha", worst, 1e-2, worst <= 1e-2,
            "(D^a v, phi) vs (D^{a/2} v, D-^{a/2} phi), 10 seeded pairs"};
}

SuiteResult suite_symbol(double beta) {
    // v = bump on [0,1]; phi(xi) = exp(-xi^2/2), whose transform is itself.
    const double X = 8.0;      // window; the tail beyond carries the bound below
    const int NX = 16384;      // window grid
    const TimeGrid grid(X, NX);
    const GridFn v = GridFn::sample(grid, bump01);
    const GridFn iv = frac_integral_left(v, beta);

    double lhs = 0.0;
    const double h = grid.tau();
    for (int n = 0; n <= NX; ++n) {
        const double w = (n == 0 || n == NX) ? 0.5 : 1.0;
        const double x = grid.node(n);
        lhs += w * iv[n] * std::exp(-x * x / 2.0);
    }
    lhs *= h;
    // Tail bound: I^b v(x) <= (int v) (x-1)^{b-1} / Gamma(b) for x > 1, and
    // int_X^inf e^{-x^2/2} dx < e^{-X^2/2} / X.
    double vmass = 0.0;
    for (int n = 0; n <= NX; ++n) vmass += h * v[n];
    const double tail =
        vmass / gamma_fn(beta) * std::pow(X - 1.0, beta - 1.0) * std::exp(-X * X / 2.0) / X;

    // F v(xi) by composite Gauss quadrature over the support.
    auto fourier_v = [&](double xi) {
        std::complex<double> acc = 0.0;
        const int M = 128;
        for (int m = 0; m < M; ++m)
            for (int i = 0; i < 4; ++i) {
                const double t = (m + kGaussX[i]) / M;
                acc += kGaussW[i] / M * bump01(t) *
                       std::exp(std::complex<double>(0.0, -xi * t));
            }
        return acc / std::sqrt(2.0 * M_PI);
    };

    // RHS over xi > 0 doubled through conjugate symmetry; the substitution
    // xi = s^{1/(1-b)} absorbs the |xi|^{-b} factor.
    const double p = 1.0 / (1.0 - beta);
    const double smax = std::pow(X, 1.0 - beta);
    const std::complex<double> rot = std::exp(std::complex<double>(0.0, -M_PI * beta / 2.0));
    double rhs = 0.0;
    const int MS = 512;
    for (int m = 0; m < MS; ++m)
        for (int i = 0; i < 4; ++i) {
            const double s = (m + kGaussX[i]) * smax / MS;
            const double xi = std::pow(s, p);
            rhs += kGaussW[i] * smax / MS * 2.0 * p * (rot * fourier_v(xi)).real() *
                   std::exp(-xi * xi / 2.0);
        }

    const double disc = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    char detail[128];
    std::snprintf(detail, sizeof detail, "beta=%.2f, lhs=%.10g rhs=%.10g tail<=%.2g", beta, lhs,
                  rhs, tail);
    return {"symbol", disc, 1e-4, disc <= 1e-4, detail};
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    out.push_back(suite_semigroup());
    out.push_back(suite_adjoint(seed));
    for (double a : {0.6, 0.75, 0.9}) {
        SuiteResult r = suite_coercivity(seed + 1, a);
        r.name = "coercivity-a" + std::to_string(int(a * 100));
        out.push_back(r);
    }
    out.push_back(suite_dalpha(seed + 2, 0.75));
    for (double b : {0.3, 0.5, 0.7}) {
        SuiteResult r = suite_symbol(b);
        r.name = "symbol-b" + std::to_string(int(b * 100));
        out.push_back(r);
    }
    return out;
}

}  // namespace tfrac
