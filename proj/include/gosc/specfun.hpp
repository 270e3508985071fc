#ifndef GOSC_SPECFUN_HPP
#define GOSC_SPECFUN_HPP

#include <complex>
#include <cstddef>
#include <span>

#include "gosc/errors.hpp"

namespace gosc {

/// Truncation control for series evaluators (hypergeometric and friends).
struct SeriesControl {
    double rel_tol = 1e-14;
    std::size_t max_terms = 10000;
};

/// ln Gamma(x), x > 0.
double log_gamma(double x);

/// Euler beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0. Computed in
/// log space so large arguments do not overflow.
double beta(double a, double b);

/// Upper incomplete gamma Gamma(s, x), s > 0, x >= 0.
double upper_incomplete_gamma(double s, double x);

/// Modified Bessel function of the first kind I_nu(x), nu >= 0, x >= 0.
/// Throws std::overflow_error when the unscaled value exceeds double range;
/// use bessel_i_scaled or log_bessel_i for large arguments.
double bessel_i(double nu, double x);

/// e^{-x} I_nu(x); stays bounded for all x >= 0.
double bessel_i_scaled(double nu, double x);

/// ln I_nu(x); valid for all x where I_nu(x) > 0.
double log_bessel_i(double nu, double x);

/// Modified Bessel function of the second kind K_nu(x), nu >= 0, x > 0.
double bessel_k(double nu, double x);

/// Generalized hypergeometric pFq(a; b; x) by direct term recursion
///   t_{n+1} = t_n * prod(a_j + n)/prod(b_j + n) * x/(n+1),
/// summed until |t_n| <= rel_tol * |partial sum|. Requires no b_j to be a
/// nonpositive integer, and p <= q (entire) or p == q+1 with |x| < 1.
double p_f_q(std::span<const double> a, std::span<const double> b, double x,
             const SeriesControl& ctl = {});

/// Meijer G^{l,0}_{0,l}(y | delta_1..delta_l), y > 0 -- the closure-measure
/// kernel of the polynomial oscillator family. Closed forms:
///   l = 1: e^{-y} y^{delta}
///   l = 2: 2 y^{(d1+d2)/2} K_{d1-d2}(2 sqrt(y))
/// l >= 3 is evaluated by numerical inversion of the Mellin transform (see
/// meijer_g_mellin_barnes).
double meijer_g_measure(double y, std::span<const double> deltas);

/// Direct Mellin-Barnes contour evaluation of G^{l,0}_{0,l}: a vertical-line
/// integral of prod_p Gamma(s + delta_p) y^{-s}, truncated where the
/// integrand falls below 1e-16 of its peak. Exposed so the closed forms can
/// be cross-checked against the contour route.
double meijer_g_mellin_barnes(double y, std::span<const double> deltas);

/// Principal branch of ln Gamma(z) for Re z > 0 (Lanczos approximation).
std::complex<double> log_gamma_complex(std::complex<double> z);

}  // namespace gosc

#endif
