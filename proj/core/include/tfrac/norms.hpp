#pragma once

#include "tfrac/grid.hpp"

#include <span>

namespace tfrac {

/// |v|_{H^beta(R)} of the zero-extended samples, computed from the discrete
/// Fourier transform: ( int |xi|^{2 beta} |Fv(xi)|^2 dxi )^{1/2} with the
/// unitary transform convention. pad_factor >= 4 sets the window length;
/// the padded length is rounded up to a power of two.
///
/// Note the exponent: the squared integrand carries |xi|^{2 beta}, the
/// multiplier matching | F(D_+^beta v) | = |xi|^beta |Fv|.
double hbeta_seminorm_fourier(const GridFn& v, double beta, int pad_factor = 4);

/// Double-integral (Slobodeckij) seminorm on (0,T). The band |s-t| < tau is
/// integrated in closed form from the local slope.
double slobodeckij_seminorm(const GridFn& v, double beta);

/// ( ||v||_{L2}^2 + |v|^2 )^{1/2} with the Slobodeckij seminorm.
double slobodeckij_norm(const GridFn& v, double beta);

/// ||v||_{H^s(0,T)} for s in [0,2): s = 0 is the L2 norm, s in (0,1) the
/// Slobodeckij norm, s = 1 adds ||v'||_{L2}, s in (1,2) adds |v'|_{H^{s-1}};
/// the derivative is taken by difference quotients.
double sobolev_norm(const GridFn& v, double s);

/// ( sum_k w_k ||c_k||^2_{H^beta(0,T)} )^{1/2}; weights encode the spatial
/// norm (1, lambda_k, lambda_k^2, ...).
double vector_hbeta_norm(std::span<const GridFn> coeffs, std::span<const double> weights,
                         double beta);

}  // namespace tfrac
