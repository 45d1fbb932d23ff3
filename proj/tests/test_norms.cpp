#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tfrac/frac_ops.hpp"
#include "tfrac/norms.hpp"
#include "tfrac/testfns.hpp"

#include <cmath>

using namespace tfrac;

TEST_CASE("zero function has zero norms") {
    const GridFn z(TimeGrid(1.0, 256));
    CHECK(hbeta_seminorm_fourier(z, 0.5) == 0.0);
    CHECK(slobodeckij_seminorm(z, 0.5) == 0.0);
    CHECK(slobodeckij_norm(z, 0.5) == 0.0);
}

TEST_CASE("resolution and parameter validation") {
    const GridFn small(TimeGrid(1.0, 32));
    CHECK_THROWS_AS(hbeta_seminorm_fourier(small, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(slobodeckij_seminorm(small, 0.5), std::invalid_argument);
    const GridFn v(TimeGrid(1.0, 128));
    CHECK_THROWS_AS(hbeta_seminorm_fourier(v, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(hbeta_seminorm_fourier(v, 0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(sobolev_norm(v, 2.0), std::invalid_argument);
}

TEST_CASE("beta = 1 recovers the derivative norm") {
    const TimeGrid g(1.0, 8192);
    const GridFn v = GridFn::sample(g, [](double t) {
        return std::sin(2.0 * M_PI * t) * bump01(t);
    });
    const double semi = hbeta_seminorm_fourier(v, 1.0);
    const GridFn d = difference_quotient(v);
    CHECK(semi == doctest::Approx(d.l2_norm()).epsilon(1e-2));
}

TEST_CASE("Fourier seminorm consistent with the fractional derivative") {
    // For compactly supported v, |v|_{H^beta(R)} = ||D_+^beta v||_{L2(R)};
    // evaluate the derivative on a window twice the support for the tail.
    const double beta = 0.6;
    const TimeGrid g(1.0, 8192);
    const GridFn v = GridFn::sample(g, bump01);
    const double semi = hbeta_seminorm_fourier(v, beta);

    const TimeGrid wide(2.0, 2 * 8192);
    const GridFn vw = GridFn::sample(wide, bump01);  // zero on (1,2)
    const GridFn dw = frac_deriv_left(vw, beta);
    CHECK(semi == doctest::Approx(dw.l2_norm()).epsilon(2e-2));
}

TEST_CASE("constant function: zero seminorm, L2 norm preserved") {
    const TimeGrid g(1.0, 256);
    const GridFn c = GridFn::sample(g, [](double) { return 3.0; });
    CHECK(slobodeckij_seminorm(c, 0.4) == doctest::Approx(0.0));
    CHECK(slobodeckij_norm(c, 0.4) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("membership: t^{-0.2} lies in H^{0.2}(0,1)") {
    double prev = 0.0;
    for (int N : {2048, 4096}) {
        const TimeGrid g(1.0, N);
        GridFn v(g);
        for (int n = 1; n <= N; ++n) v[n] = std::pow(g.node(n), -0.2);
        v[0] = v[1];  // flat first cell; the norm is insensitive under refinement
        const double norm = slobodeckij_norm(v, 0.2);
        CHECK(std::isfinite(norm));
        if (prev > 0.0) CHECK(std::abs(norm - prev) <= 0.1 * prev);
        prev = norm;
    }
}

TEST_CASE("non-membership: t^{0.1} diverges in H^{0.9}(0,1)") {
    double prev = 0.0;
    int growths = 0;
    for (int N : {512, 1024, 2048, 4096, 8192}) {
        const TimeGrid g(1.0, N);
        const GridFn v = GridFn::sample(g, [](double t) { return std::pow(t, 0.1); });
        const double norm = slobodeckij_norm(v, 0.9);
        if (prev > 0.0 && norm > prev) ++growths;
        prev = norm;
    }
    CHECK(growths == 4);  // strictly increasing under every refinement
}

TEST_CASE("vector norm collapses and stacks") {
    const TimeGrid g(1.0, 256);
    const GridFn zero(g);
    const GridFn a = GridFn::sample(g, [](double t) { return t; });
    const GridFn b = GridFn::sample(g, [](double t) { return t * t; });

    const std::vector<GridFn> zs = {zero, zero};
    const std::vector<double> w1 = {1.0, 1.0};
    CHECK(vector_hbeta_norm(zs, w1, 0.5) == 0.0);

    const std::vector<GridFn> single = {a};
    const std::vector<double> ws = {1.0};
    CHECK(vector_hbeta_norm(single, ws, 0.5) ==
          doctest::Approx(slobodeckij_norm(a, 0.5)).epsilon(1e-14));

    const std::vector<GridFn> both = {a, b};
    const std::vector<double> w2 = {2.0, 3.0};
    const double na = slobodeckij_norm(a, 0.5), nb = slobodeckij_norm(b, 0.5);
    CHECK(vector_hbeta_norm(both, w2, 0.5) ==
          doctest::Approx(std::sqrt(2.0 * na * na + 3.0 * nb * nb)).epsilon(1e-14));

    const std::vector<double> bad = {1.0};
    CHECK_THROWS_AS(vector_hbeta_norm(both, bad, 0.5), std::invalid_argument);
}

TEST_CASE("norm equivalence: derivative norm vs intrinsic norm") {
    const double alpha = 0.75;
    for (int N : {4096, 8192}) {
        const TimeGrid g(1.0, N);
        for (const auto& bump : sine_bump_family(11, 20, 1.0)) {
            const GridFn v = GridFn::sample(g, [&](double t) { return bump(t); });
            const double dn = frac_deriv_left(v, alpha / 2.0).l2_norm();
            const double hn = slobodeckij_norm(v, alpha / 2.0);
            const double ratio = dn / hn;
            CHECK(ratio >= 0.2);
            CHECK(ratio <= 5.0);
        }
    }
}

TEST_CASE("smoothing of the fractional integral") {
    const double beta = 0.5;
    double worst_prev = -1.0;
    for (int N : {2048, 4096}) {
        const TimeGrid g(1.0, N);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const GridFn h = GridFn::sample(g, seeded_polynomial(300 + i, 1.0));
            const GridFn ih = frac_integral_left(h, beta);
            // I^beta h(0) = 0 at the tau^beta scale.
            CHECK(std::abs(ih[0]) <= std::pow(g.tau(), beta) * (h.max_norm() + 1.0));
            worst = std::max(worst, slobodeckij_norm(ih, beta) / h.l2_norm());
        }
        CHECK(worst <= 10.0);
        if (worst_prev > 0.0) CHECK(std::abs(worst - worst_prev) <= 0.15 * worst_prev);
        worst_prev = worst;
    }
}

TEST_CASE("Slobodeckij and Fourier seminorms agree within a constant") {
    const TimeGrid g(1.0, 4096);
    for (const auto& bump : sine_bump_family(23, 5, 1.0)) {
        const GridFn v = GridFn::sample(g, [&](double t) { return bump(t); });
        for (double beta : {0.3, 0.6}) {
            const double f = hbeta_seminorm_fourier(v, beta);
            const double s = slobodeckij_seminorm(v, beta);
            CHECK(f / s >= 0.2);
            CHECK(f / s <= 5.0);
        }
    }
}

TEST_CASE("coercivity pairing at alpha = 0.75") {
    const double alpha = 0.75;
    const TimeGrid g(1.0, 8192);
    const GridFn v = GridFn::sample(g, [](double t) { return bump01(t); });
    const double pairing =
        inner_product(frac_deriv_left(v, alpha / 2.0), frac_deriv_right(v, alpha / 2.0));
    const double semi = hbeta_seminorm_fourier(v, alpha / 2.0);
    const double target = std::cos(alpha * M_PI / 2.0);
    CHECK(pairing / (semi * semi) == doctest::Approx(target).epsilon(0.05));
}
