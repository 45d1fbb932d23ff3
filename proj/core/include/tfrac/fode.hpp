#pragma once

#include "tfrac/grid.hpp"

#include <string>
#include <utility>

namespace tfrac {

/// One modal instance of D_{0+}^alpha (y - y0) + lambda y = g on (0,T).
struct ModeProblem {
    double alpha;   // model order, (0.5, 1) at the PDE layer; (0,1) accepted here
    double lambda;  // > 0
    double y0;
    GridFn g;       // sampled forcing on the solve grid
    double g0;      // g(0), supplied explicitly

    void validate() const;
};

/// S(t) = coefficient * t^alpha with coefficient = (g0 - lambda y0)/Gamma(1+alpha).
struct SingularPart {
    double coefficient = 0.0;
    double alpha = 0.75;

    double eval(double t) const;
    GridFn sample(TimeGrid grid) const;
};

enum class SolverId { oracle, l1, l1_corrected };

SolverId parse_solver_id(const std::string& name);
std::string solver_name(SolverId id);

/// Closed-form reference solution via Mittag-Leffler functions:
///   y(t) = y0 E_a(-l t^a) + int_0^t (t-s)^{a-1} E_{a,a}(-l (t-s)^a) g(s) ds,
/// with the piecewise linear g convolved against exact kernel moments.
GridFn solve_ml_oracle(const ModeProblem& p);

/// Implicit L1 stepping.
GridFn solve_l1(const ModeProblem& p);

/// Singularity-corrected L1: subtracts S and solves for the smooth remainder
/// w = y - y0 - S, using D^a S = g0 - lambda y0 analytically.
std::pair<GridFn, SingularPart> solve_l1_corrected(const ModeProblem& p);

struct ConvergenceTable {
    std::vector<int> sizes;         // strictly doubling
    std::vector<double> err_linf;   // vs oracle, node max
    std::vector<double> err_l2;     // vs oracle, trapezoidal
    std::vector<double> order_linf; // log2(e_i / e_{i+1})
    std::vector<double> order_l2;
    bool exact = false;             // all errors at rounding level

    /// Mean of the last `tail` fitted orders (default: all).
    double fitted_order_linf(int tail = 0) const;
    double fitted_order_l2(int tail = 0) const;
};

/// Forcing given as a callable so each level can resample it.
struct ModeProblemSpec {
    double alpha;
    double lambda;
    double y0;
    std::function<double(double)> g;
    double g0;
    double T;

    ModeProblem instantiate(int N) const;
};

ConvergenceTable estimate_order(SolverId solver, const ModeProblemSpec& spec, int base_N,
                                int levels);

/// Least-squares slope of log|y - y0| vs log t over nodes 1..window.
/// Requires window <= N/8.
double estimate_singular_exponent(const GridFn& y, double y0, int window);

}  // namespace tfrac
