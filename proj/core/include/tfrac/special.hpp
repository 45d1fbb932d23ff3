#pragma once

#include <stdexcept>

namespace tfrac {

/// Gamma function on the positive axis. Throws std::domain_error for x <= 0
/// and std::overflow_error for x > 171 (double overflow threshold).
double gamma_fn(double x);

/// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MLParams {
    double alpha;  // in (0, 1]
    double beta;   // > 0

    MLParams(double a, double b) : alpha(a), beta(b) {
        if (!(alpha > 0.0) || alpha > 1.0)
            throw std::invalid_argument("MLParams: alpha must lie in (0,1]");
        if (!(beta > 0.0)) throw std::invalid_argument("MLParams: beta must be positive");
    }
};

/// Arguments beyond this magnitude are rejected.
double ml_z_max();
void set_ml_z_max(double z);

/// |z| threshold where evaluation switches from the power series to the
/// integral representation. Tests cover the overlap window around it.
inline constexpr double kMLBranchSwitch = 5.0;

/// E_{alpha,beta}(z) for real z <= 0.
double mittag_leffler(const MLParams& p, double z);

/// Individual branches, exposed so the cross-over agreement can be audited.
double ml_series(const MLParams& p, double z);
double ml_integral(const MLParams& p, double z);

}  // namespace tfrac
