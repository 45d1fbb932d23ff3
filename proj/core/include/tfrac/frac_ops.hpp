#pragma once

#include "tfrac/grid.hpp"

namespace tfrac {

/// Riemann-Liouville integral I_{0+}^beta of the piecewise linear interpolant,
/// with the kernel (t-s)^{beta-1} integrated exactly on every subinterval.
/// The input is extended by zero outside [0,T]. Requires beta in (0,1].
GridFn frac_integral_left(const GridFn& v, double beta);

/// Mirror image about t -> T - t: I_{T-}^beta.
GridFn frac_integral_right(const GridFn& v, double beta);

/// L1 discretization of D_{0+}^alpha for alpha in (0,1). Requires v(0) = 0
/// (the solvers always feed it y - y0). The node-0 value is set to 0.
GridFn frac_deriv_left(const GridFn& v, double alpha);

/// Mirror image: D_{T-}^alpha; requires v(T) = 0.
GridFn frac_deriv_right(const GridFn& v, double alpha);

/// Closed-form I_{0+}^beta t^mu = Gamma(mu+1)/Gamma(mu+beta+1) t^{mu+beta}.
double monomial_frac_integral(double mu, double beta, double t);

/// L1 weights b_j = (j+1)^{1-alpha} - j^{1-alpha}, j = 0..count-1.
std::vector<double> l1_weights(double alpha, int count);

}  // namespace tfrac
