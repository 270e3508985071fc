#ifndef GOSC_BEAMSPLITTER_HPP
#define GOSC_BEAMSPLITTER_HPP

#include <complex>
#include <cstddef>

#include "gosc/states.hpp"
#include "gosc/two_mode.hpp"

namespace gosc {

/// Per-channel photon statistics of a joint distribution.
struct ChannelReport {
    PhotonStatistics horizontal;
    PhotonStatistics vertical;
    double covariance = 0.0;      // Cov(n_H, n_V)
    double total_variance = 0.0;  // Var(n_H + n_V), computed directly
    double mutual_information = 0.0;  // nats
    double g2_horizontal = 0.0;       // <n(n-1)>/<n>^2, 0 at vacuum
    double g2_vertical = 0.0;
};

struct FactorizationResult {
    bool separable = false;
    double mutual_information = 0.0;
    double singular_value_ratio = 0.0;  // sigma_2/sigma_1 of the probability matrix
};

/// Embed a single-mode state in the horizontal channel with vacuum in the
/// vertical one: |psi, 0>.
TwoModeState tensor_with_vacuum(const TruncatedState& state);

/// The 50:50 splitter exp[i (pi/4) (a_H^dag a_V + a_H a_V^dag)] applied
/// exactly on the truncated space. The generator is block diagonal over the
/// total photon number; each block is a Hermitian tridiagonal matrix
/// exponentiated through its eigendecomposition, so the map is unitary and
/// free of truncation leakage.
TwoModeState bs_oracle(const TwoModeState& input);

/// Closed form of the splitter acting on |n, 0>:
///   2^{-n/2} sum_k C(n,k)^{1/2} i^{n-k} |k, n-k>,
/// i.e. the binomial two-mode superposition with the i-phase attached to the
/// vertical photon count. Matches bs_oracle amplitude for amplitude.
TwoModeState bs_fock_closed_form(std::size_t n);

/// |amplitude|^2 of a two-mode state.
JointDistribution joint_probabilities(const TwoModeState& state);

/// Joint counting distribution for the Fock input |n, 0> through the
/// Gamma/Beta closed form; supported on the antidiagonal n_H + n_V = n.
JointDistribution joint_fock(std::size_t n);

/// Joint distribution for a conventional coherent input |z, 0>: the product
/// of two Poisson distributions with mean |z|^2/2.
JointDistribution joint_coherent(std::complex<double> z, double tol = 1e-12);

/// Joint distribution for the su(1,1) coherent input (alpha1=alpha2=beta1=1):
///   P(n,m) = 2^{-n-m} (n+1)(m+1) B(m+1,n+1) |z|^{2(n+m)+1}
///            / [Gamma(n+1)Gamma(n+2)Gamma(m+1)Gamma(m+2) I_1(2|z|)].
JointDistribution joint_su11(std::complex<double> z, double tol = 1e-12);

/// Marginal statistics, covariance, mutual information and per-channel g2
/// of a (near-)normalized joint distribution.
ChannelReport channel_report(const JointDistribution& joint);

/// Separability test: score = mutual information, separable iff below the
/// threshold. The second-singular-value ratio is reported as a rank-1
/// diagnostic.
FactorizationResult factorization_test(const JointDistribution& joint, double threshold = 1e-6);

/// Second-order coherence <n(n-1)>/<n>^2 of a single-mode state.
/// Throws std::domain_error for the vacuum.
double input_g2(const TruncatedState& state);

}  // namespace gosc

#endif
