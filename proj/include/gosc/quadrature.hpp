#ifndef GOSC_QUADRATURE_HPP
#define GOSC_QUADRATURE_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "gosc/errors.hpp"

namespace gosc {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration on [a, b].
template <typename F>
QuadResult integrate(F&& f, double a, double b, double rel_tol = 1e-12,
                     std::size_t max_depth = 15) {
    QuadResult r;
    r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, max_depth, rel_tol, &r.abs_error);
    return r;
}

/// Integral of f over [0, inf) for integrands with an exponential-type tail.
/// The domain is truncated at X, doubling X until the local tail estimate
/// f(X)*X drops below tail_tol times the accumulated integral. Near zero the
/// substitution x = u^2 is applied so integrable x^delta singularities with
/// delta > -1 are handled.
template <typename F>
QuadResult integrate_moment(F&& f, double rel_tol = 1e-12, double tail_tol = 1e-14,
                            double x_start = 64.0) {
    // [0,1] via x = u^2: dx = 2u du.
    QuadResult head = integrate([&](double u) { return f(u * u) * 2.0 * u; }, 0.0, 1.0, rel_tol);
    double total = head.value;
    double abs_err = head.abs_error;

    double lo = 1.0;
    double hi = std::max(2.0, x_start);
    for (int k = 0; k < 40; ++k) {
        QuadResult part = integrate(f, lo, hi, rel_tol);
        total += part.value;
        abs_err += part.abs_error;
        const double tail_estimate = std::abs(f(hi)) * hi;
        if (tail_estimate <= tail_tol * std::max(std::abs(total), 1e-300))
            return {total, abs_err};
        lo = hi;
        hi *= 2.0;
    }
    throw convergence_error("integrate_moment: tail did not decay below tolerance");
}

}  // namespace gosc

#endif
