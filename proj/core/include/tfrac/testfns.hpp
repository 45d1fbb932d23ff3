#pragma once

#include "tfrac/grid.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace tfrac {

/// C-infinity bump supported on (0,1): exp(4 - 1/(s(1-s))), peak value 1.
double bump01(double s);

/// Derivative of bump01.
double bump01_prime(double s);

/// A member of the seeded sine-bump family on (0,T): a bump scaled into
/// [a, a+w] times sin(k pi (t-a)/w + phase). Compactly supported, smooth.
struct SineBump {
    double a, w, k, phase, amp, T;
    double operator()(double t) const;
    double prime(double t) const;
};

/// Deterministic family used by the randomized suites; the seed is the only
/// source of variation.
std::vector<SineBump> sine_bump_family(std::uint64_t seed, int count, double T);

/// Random polynomial with coefficients in [-1,1], degree <= 5.
std::function<double(double)> seeded_polynomial(std::uint64_t seed, double T);

}  // namespace tfrac
