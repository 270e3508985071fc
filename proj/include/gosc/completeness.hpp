#ifndef GOSC_COMPLETENESS_HPP
#define GOSC_COMPLETENESS_HPP

#include <cstdint>
#include <vector>

#include "gosc/algebra.hpp"

namespace gosc {

/// One row of a moment-equation check: quadrature of the measure density
/// against x^n compared with E(n)!. Relative error is measured in log space,
/// |ln(quadrature) - ln E(n)!|, so superfactorial targets stay comparable.
struct MomentEntry {
    std::uint64_t n = 0;
    double quadrature_value = 0.0;  // may overflow to inf for very large n
    double quadrature_log = 0.0;
    double target = 0.0;
    double target_log = 0.0;
    double relative_error = 0.0;
};

struct MomentReport {
    std::vector<MomentEntry> entries;
    double max_relative_error = 0.0;
};

/// Radial density Lambda_E of the closure relation, defined for the
/// polynomial family (identity and su(1,1) included):
///   Lambda_E(x) = G^{l,0}_{0,l}(x/gamma | delta_1..delta_l)
///                 / (gamma * prod_p Gamma(1+delta_p)).
/// Specs with any delta_p <= -1 are rejected (divergent moments); other
/// variants raise unsupported_error.
double measure_density(const AlgebraSpec& spec, double x);

/// Checks integral_0^inf Lambda_E(x) x^n dx = E(n)! for n = 0..n_max by
/// adaptive quadrature with tail truncation controlled by quad_tol.
MomentReport verify_moments(const AlgebraSpec& spec, std::uint64_t n_max, double quad_tol = 1e-12);

/// Assembles integral dsigma_E |z_E><z_E| on the truncated Fock basis by
/// radial quadrature (the angular integral is analytic and kills all
/// off-diagonal elements) and returns the maximum deviation of the diagonal
/// entries from 1.
double resolution_of_identity_check(const AlgebraSpec& spec, std::size_t cutoff,
                                    double quad_tol = 1e-12);

}  // namespace gosc

#endif
