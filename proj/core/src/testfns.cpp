#include "tfrac/testfns.hpp"

#include <cmath>
#include <random>

namespace tfrac {

double bump01(double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    return std::exp(4.0 - 1.0 / (s * (1.0 - s)));
}

double bump01_prime(double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    const double q = s * (1.0 - s);
    return bump01(s) * (1.0 - 2.0 * s) / (q * q);
}

double SineBump::operator()(double t) const {
    const double s = (t - a) / w;
    if (s <= 0.0 || s >= 1.0) return 0.0;
    return amp * bump01(s) * std::sin(k * M_PI * s + phase);
}

double SineBump::prime(double t) const {
    const double s = (t - a) / w;
    if (s <= 0.0 || s >= 1.0) return 0.0;
    return amp / w *
           (bump01_prime(s) * std::sin(k * M_PI * s + phase) +
            bump01(s) * k * M_PI * std::cos(k * M_PI * s + phase));
}

std::vector<SineBump> sine_bump_family(std::uint64_t seed, int count, double T) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<SineBump> out;
    for (int i = 0; i < count; ++i) {
        SineBump b;
        b.a = (0.05 + 0.3 * uni(rng)) * T;
        b.w = (0.3 + 0.5 * uni(rng)) * T;
        if (b.a + b.w > 0.95 * T) b.w = 0.95 * T - b.a;
        b.k = 1.0 + std::floor(4.0 * uni(rng));
        b.phase = 2.0 * M_PI * uni(rng);
        b.amp = 0.5 + uni(rng);
        b.T = T;
        out.push_back(b);
    }
    return out;
}

std::function<double(double)> seeded_polynomial(std::uint64_t seed, double T) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> coeffs(6);
    for (double& c : coeffs) c = uni(rng);
    return [coeffs, T](double t) {
        const double s = t / T;
        double acc = 0.0;
        for (int d = 5; d >= 0; --d) acc = acc * s + coeffs[d];
        return acc;
    };
}

}  // namespace tfrac
