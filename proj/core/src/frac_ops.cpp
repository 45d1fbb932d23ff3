#include "tfrac/frac_ops.hpp"

#include "tfrac/special.hpp"

#include <cmath>

namespace tfrac {

namespace {

void check_order(double beta, double lo, double hi, const char* who) {
    if (!(beta > lo) || !(beta <= hi))
        throw std::invalid_argument(std::string(who) + ": order out of range");
}

}  // namespace

GridFn frac_integral_left(const GridFn& v, double beta) {
    check_order(beta, 0.0, 1.0, "frac_integral_left");
    v.check();
    const int N = v.grid.N;
    const double tau = v.grid.tau();

    // Kernel moments over the lag-d subinterval [ (d-1)tau, d tau ]:
    //   A_d = 1/Gamma(b) int u^{b-1} du,  B_d = 1/Gamma(b) int u^b du.
    std::vector<double> A(N + 1), B(N + 1);
    const double ga1 = gamma_fn(beta + 1.0);
    const double tb = std::pow(tau, beta);
    for (int d = 0; d <= N; ++d) {
        A[d] = tb * std::pow(double(d), beta) / ga1;
        B[d] = tb * tau * std::pow(double(d), beta + 1.0) * beta / (ga1 * (beta + 1.0));
    }

    GridFn out(v.grid);
    for (int n = 1; n <= N; ++n) {
        // On [t_{n-d}, t_{n-d+1}] the interpolant is v_{n-d} + m (s - t_{n-d});
        // with u = t_n - s it reads (v_{n-d} + m d tau) - m u.
        double acc = 0.0;
        for (int d = 1; d <= n; ++d) {
            const double v0 = v[n - d];
            const double m = (v[n - d + 1] - v0) / tau;
            acc += (v0 + m * d * tau) * (A[d] - A[d - 1]) - m * (B[d] - B[d - 1]);
        }
        out[n] = acc;
    }
    return out;
}

GridFn frac_integral_right(const GridFn& v, double beta) {
    return reverse(frac_integral_left(reverse(v), beta));
}

std::vector<double> l1_weights(double alpha, int count) {
    std::vector<double> b(count);
    for (int j = 0; j < count; ++j)
        b[j] = std::pow(double(j + 1), 1.0 - alpha) - std::pow(double(j), 1.0 - alpha);
    return b;
}

GridFn frac_deriv_left(const GridFn& v, double alpha) {
    check_order(alpha, 0.0, 1.0 - 1e-15, "frac_deriv_left");
    v.check();
    const int N = v.grid.N;
    const double tau = v.grid.tau();
    if (std::abs(v[0]) > 1e-10 * std::max(1.0, v.max_norm()))
        throw std::invalid_argument("frac_deriv_left: requires v(0) = 0");

    const std::vector<double> b = l1_weights(alpha, N);
    const double scale = std::pow(tau, -alpha) / gamma_fn(2.0 - alpha);
    GridFn out(v.grid);
    out[0] = 0.0;  // unbounded in general; fixed by convention
    for (int n = 1; n <= N; ++n) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += b[j] * (v[n - j] - v[n - j - 1]);
        out[n] = scale * acc;
    }
    return out;
}

GridFn frac_deriv_right(const GridFn& v, double alpha) {
    if (std::abs(v[v.grid.N]) > 1e-10 * std::max(1.0, v.max_norm()))
        throw std::invalid_argument("frac_deriv_right: requires v(T) = 0");
    return reverse(frac_deriv_left(reverse(v), alpha));
}

double monomial_frac_integral(double mu, double beta, double t) {
    if (!(mu > -1.0)) throw std::domain_error("monomial_frac_integral: mu must exceed -1");
    check_order(beta, 0.0, 1.0, "monomial_frac_integral");
    if (t < 0.0) throw std::domain_error("monomial_frac_integral: t must be nonnegative");
    return gamma_fn(mu + 1.0) / gamma_fn(mu + beta + 1.0) * std::pow(t, mu + beta);
}

}  // namespace tfrac
