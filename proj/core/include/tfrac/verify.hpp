#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tfrac {

struct SuiteResult {
    std::string name;
    double discrepancy = 0.0;  // measured, relative
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

/// Composition of two fractional integrals vs the single summed order,
/// checked on monomials. L2-grid relative discrepancy at N = 4096.
SuiteResult suite_semigroup(int N = 4096);

/// (I_{0+}^b u, v) vs (u, I_{T-}^b v) on seeded polynomial pairs.
SuiteResult suite_adjoint(std::uint64_t seed, int N = 4096);

/// (D_{0+}^{a/2} v, D_{T-}^{a/2} v) vs cos(a pi / 2) |v|^2_{H^{a/2}(R)}
/// over seeded compactly supported test functions.
SuiteResult suite_coercivity(std::uint64_t seed, double alpha, int N = 8192);

/// Integration by parts: (D_{0+}^a v, phi) vs (D_{0+}^{a/2} v, D_{T-}^{a/2} phi)
/// on seeded test pairs.
SuiteResult suite_dalpha(std::uint64_t seed, double alpha, int N = 4096);

/// Fourier symbol of I_+^beta in weak form: int I_+^b v . Fphi dx vs
/// int (i xi)^{-b} Fv . phi dxi for a bump v on [0,1] and Gaussian phi.
SuiteResult suite_symbol(double beta);

/// The full battery run by the CLI `verify` command.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace tfrac
