#ifndef GOSC_STATES_HPP
#define GOSC_STATES_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "gosc/algebra.hpp"
#include "gosc/two_mode.hpp"

namespace gosc {

/// Moments of a single-mode photon-number distribution.
struct PhotonStatistics {
    double mean = 0.0;
    double second_factorial = 0.0;  // <n(n-1)>
    double variance = 0.0;
    double mandel_q = 0.0;  // variance/mean - 1; 0 at vacuum by convention
};

/// A normalized state on the truncated Fock space. coefficient(k) is the
/// amplitude of level base_level + k; base_level is 1 for states built on
/// the invariant subspace of the SUSY-like algebras, 0 otherwise.
class TruncatedState {
public:
    TruncatedState(std::vector<std::complex<double>> coefficients, std::size_t base_level,
                   double tail_bound);

    static TruncatedState number_state(std::size_t n);

    const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }
    std::size_t base_level() const { return base_level_; }
    /// Highest occupied Fock level.
    std::size_t cutoff() const { return base_level_ + coeffs_.size() - 1; }
    double tail_bound() const { return tail_bound_; }

    /// Amplitude of |n> for an absolute level n.
    std::complex<double> amplitude(std::size_t n) const;

private:
    std::vector<std::complex<double>> coeffs_;
    std::size_t base_level_ = 0;
    double tail_bound_ = 0.0;
};

/// Normalized solution of a_E |z> = z |z>, coefficients z^n / sqrt(E(n)!).
/// The cutoff is raised adaptively until the analytic tail bound drops below
/// tol (throws convergence_error past the hard cap). For algebras with
/// E(0) = E(1) = 0 the state lives on span{|1>, |2>, ...} with coefficients
/// c_k ~ z^k / sqrt(prod_{j=1..k} E(j+1)).
TruncatedState coherent_state(const AlgebraSpec& spec, std::complex<double> z, double tol = 1e-12);

/// N_E(r) = [sum_n r^{2n} / E(n)!]^{-1/2} = (e_E^{r^2})^{-1/2}.
double normalization_constant(const AlgebraSpec& spec, double r);

/// E-exponential e_E^x = sum_n x^n / E(n)!. Throws std::overflow_error when
/// the value exceeds double range (use log_e_exponential instead).
double e_exponential(const AlgebraSpec& spec, double x);

/// ln e_E^x for x >= 0; safe for arguments where e_E^x overflows.
double log_e_exponential(const AlgebraSpec& spec, double x);

/// P(n) = |c_n|^2 over absolute levels 0..cutoff.
std::vector<double> photon_distribution(const TruncatedState& state);

PhotonStatistics statistics(const TruncatedState& state);

/// Statistics of an arbitrary number distribution p(n), n = 0.. (helper
/// shared with the beam-splitter channel reports).
PhotonStatistics statistics_of_distribution(const std::vector<double>& p);

/// Fock-Bargmann representation psi(z) = sum_n z^n psi_n / sqrt(E(n)!).
/// Not defined for the SUSY-like variants (E(n)! vanishes): throws
/// zero_divisor_error.
std::complex<double> bargmann_eval(const TruncatedState& state, const AlgebraSpec& spec,
                                   std::complex<double> z);

/// su(2) coherent state in the two-oscillator (Schwinger) realization:
///   (1+|xi|^2)^{-n/2} sum_k C(n,k)^{1/2} xi^k |k, n-k>.
TwoModeState su2_coherent_state(std::size_t n, std::complex<double> xi);

}  // namespace gosc

#endif
