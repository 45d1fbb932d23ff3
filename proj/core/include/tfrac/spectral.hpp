#pragma once

#include "tfrac/fode.hpp"
#include "tfrac/grid.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tfrac {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct SpatialDomain {
    enum class Kind { interval, rectangle };
    Kind kind = Kind::interval;
    double Lx = 1.0;
    double Ly = 1.0;  // ignored for intervals
    int quad_res = 64;  // subintervals per axis for projections

    static SpatialDomain interval(double L, int M = 64);
    static SpatialDomain rectangle(double Lx, double Ly, int M = 64);
    void validate() const;
};

/// One Dirichlet-Laplacian eigenpair, kept as its sine indices.
struct EigenMode {
    double lambda;
    int kx;
    int ky;  // 0 for interval modes
};

struct EigenBasis {
    SpatialDomain domain;
    std::vector<EigenMode> modes;  // lambda nondecreasing, lexicographic tie-break

    int count() const { return static_cast<int>(modes.size()); }
    /// phi_k(p); L2-normalized on the domain.
    double eval(int k, Point p) const;
};

EigenBasis build_basis(const SpatialDomain& domain, int K);

/// Modal coefficients <fn, phi_k> by composite Gauss quadrature.
std::vector<double> project(const std::function<double(Point)>& fn, const EigenBasis& basis);

struct ProblemSpec {
    SpatialDomain domain;
    double alpha = 0.75;  // (0.5, 1)
    double T = 1.0;
    int K = 8;
    int N = 256;
    std::function<double(Point)> u0;
    std::function<double(Point, double)> f;  // may be null for f = 0
    SolverId solver = SolverId::oracle;

    void validate() const;
};

struct SpectralField {
    EigenBasis basis;
    std::vector<GridFn> coeffs;        // c_k on the shared time grid
    std::vector<double> c0;            // c_k(0)
    std::vector<GridFn> modal_force;   // f_k, kept for residuals and reports

    /// |c_K| relative to the largest mode, a truncation indicator.
    double spectral_tail() const;
};

SpectralField solve_field(const ProblemSpec& spec);

/// S(x,t) = sum_k sigma_k t^alpha phi_k with sigma_k = (f_k(0) - lambda_k c_k(0)) / Gamma(1+alpha).
struct SingularField {
    EigenBasis basis;
    std::vector<double> sigma;
    double alpha;

    double eval(Point p, double t) const;
};

SingularField singular_field(const SpectralField& field, const ProblemSpec& spec);

double evaluate_field(const SpectralField& field, Point p, double t);

/// Residual of the weak form against the test function eta(t) phi_j(x),
/// with eta compactly supported in (0,T). The fractional pairing is moved
/// onto the test function: (D^a v, eta) = -(I^{1-a} v, eta').
double weak_residual(const SpectralField& field, const ProblemSpec& spec, int mode_j,
                     const std::function<double(double)>& eta,
                     const std::function<double(double)>& eta_prime);

struct RegularityRecord {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool refinement_stable = false;
    double refinement_change = 0.0;  // relative ratio change under doubling
};

struct RegularityReport {
    std::vector<RegularityRecord> records;
    double alpha = 0.0;
    double T = 0.0;
    int N = 0;
    int K = 0;
    std::string solver;
};

/// Known estimate ids: esti-u-1..4 (PDE layer) and ode-1-1..4 / ode-2-1..4
/// (first-mode ODE layer). Throws for a hypothesis the declared data lacks.
RegularityReport regularity_report(const ProblemSpec& spec,
                                   const std::vector<std::string>& estimate_ids);

}  // namespace tfrac
