#include "gosc/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "gosc/quadrature.hpp"

namespace gosc {

namespace {

[[noreturn]] void domain_fail(const char* fn, const std::string& detail) {
    throw std::domain_error(std::string(fn) + ": " + detail);
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Asymptotic expansion of e^{-x} I_nu(x): 1/sqrt(2 pi x) * sum_k (-1)^k a_k / x^k
// with a_k = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k). Used only where the
// series has reached machine precision (x >= bessel_i_asymptotic_cutoff).
constexpr double bessel_i_asymptotic_cutoff = 600.0;

double bessel_i_scaled_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        const double prev = sum;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) || sum == prev) break;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) domain_fail("log_gamma", "requires x > 0");
    return std::lgamma(x);
}

double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) domain_fail("beta", "requires a, b > 0");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double upper_incomplete_gamma(double s, double x) {
    if (!(s > 0.0)) domain_fail("upper_incomplete_gamma", "requires s > 0");
    if (!(x >= 0.0)) domain_fail("upper_incomplete_gamma", "requires x >= 0");
    if (x == 0.0) return std::tgamma(s);
    return boost::math::tgamma(s, x);
}

double bessel_i(double nu, double x) {
    if (!(nu >= 0.0)) domain_fail("bessel_i", "requires nu >= 0");
    if (!(x >= 0.0)) domain_fail("bessel_i", "requires x >= 0");
    if (x > 700.0) {
        std::ostringstream os;
        os << "bessel_i: I_" << nu << "(" << x << ") overflows; use the scaled form";
        throw std::overflow_error(os.str());
    }
    double v = boost::math::cyl_bessel_i(nu, x);
    if (!std::isfinite(v))
        throw std::overflow_error("bessel_i: result not representable; use the scaled form");
    return v;
}

double bessel_i_scaled(double nu, double x) {
    if (!(nu >= 0.0)) domain_fail("bessel_i_scaled", "requires nu >= 0");
    if (!(x >= 0.0)) domain_fail("bessel_i_scaled", "requires x >= 0");
    if (x <= bessel_i_asymptotic_cutoff)
        return std::exp(-x) * boost::math::cyl_bessel_i(nu, x);
    return bessel_i_scaled_asymptotic(nu, x);
}

double log_bessel_i(double nu, double x) {
    if (!(x > 0.0)) domain_fail("log_bessel_i", "requires x > 0");
    return x + std::log(bessel_i_scaled(nu, x));
}

double bessel_k(double nu, double x) {
    if (!(nu >= 0.0)) domain_fail("bessel_k", "requires nu >= 0");
    if (!(x > 0.0)) domain_fail("bessel_k", "diverges at x <= 0");
    return boost::math::cyl_bessel_k(nu, x);
}

double p_f_q(std::span<const double> a, std::span<const double> b, double x,
             const SeriesControl& ctl) {
    for (double bj : b) {
        if (is_nonpositive_integer(bj)) {
            std::ostringstream os;
            os << "p_f_q: lower parameter " << bj << " is a nonpositive integer (pole)";
            throw std::domain_error(os.str());
        }
    }
    // A nonpositive-integer upper parameter terminates the series; otherwise
    // convergence needs p <= q, or p == q+1 with |x| < 1.
    bool terminating = false;
    for (double aj : a) terminating = terminating || is_nonpositive_integer(aj);
    if (!terminating) {
        if (a.size() > b.size() + 1)
            throw convergence_error("p_f_q: divergent for p > q+1");
        if (a.size() == b.size() + 1 && std::abs(x) >= 1.0)
            throw convergence_error("p_f_q: p = q+1 series requires |x| < 1");
    }

    double term = 1.0;
    double sum = 1.0;
    std::size_t small_streak = 0;
    for (std::size_t n = 0; n < ctl.max_terms; ++n) {
        double ratio = x / static_cast<double>(n + 1);
        for (double aj : a) ratio *= aj + static_cast<double>(n);
        for (double bj : b) ratio /= bj + static_cast<double>(n);
        term *= ratio;
        if (term == 0.0) return sum;
        sum += term;
        if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw convergence_error("p_f_q: series did not converge within max_terms");
}

std::complex<double> log_gamma_complex(std::complex<double> z) {
    // Lanczos approximation, g = 7, 9 coefficients; valid for Re z > 0.
    static const double lanczos[9] = {
        0.99999999999980993,    676.5203681218851,   -1259.1392167224028,
        771.32342877765313,     -176.61502916214059, 12.507343278686905,
        -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() <= 0.0)
        throw std::domain_error("log_gamma_complex: requires Re z > 0");
    z -= 1.0;
    std::complex<double> x = lanczos[0];
    for (int k = 1; k < 9; ++k) x += lanczos[k] / (z + static_cast<double>(k));
    const std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double meijer_g_mellin_barnes(double y, std::span<const double> deltas) {
    if (!(y > 0.0)) domain_fail("meijer_g_mellin_barnes", "requires y > 0");
    if (deltas.empty()) domain_fail("meijer_g_mellin_barnes", "needs at least one delta");

    double dmin = deltas[0];
    for (double d : deltas) dmin = std::min(dmin, d);
    const double c = 1.0 + std::max(0.0, -dmin);  // contour right of every pole
    const double log_y = std::log(y);

    auto integrand = [&](double t) -> std::complex<double> {
        std::complex<double> s(c, t);
        std::complex<double> acc = 0.0;
        for (double d : deltas) acc += log_gamma_complex(s + d);
        acc -= s * log_y;
        return std::exp(acc);
    };

    // |Gamma(c + d + it)| decays like e^{-pi |t| / 2} per factor: march out
    // until the magnitude falls 16 decades below the peak.
    const double peak = std::abs(integrand(0.0));
    if (peak == 0.0) return 0.0;
    double T = 1.0;
    while (T < 400.0 && std::abs(integrand(T)) > 1e-16 * peak) T += 1.0;

    QuadResult q = integrate([&](double t) { return integrand(t).real(); }, 0.0, T, 1e-13);
    double value = q.value / M_PI;
    if (!std::isfinite(value))
        throw convergence_error("meijer_g_mellin_barnes: contour quadrature failed");
    return value;
}

double meijer_g_measure(double y, std::span<const double> deltas) {
    if (!(y > 0.0)) domain_fail("meijer_g_measure", "requires y > 0");
    if (deltas.empty()) domain_fail("meijer_g_measure", "needs at least one delta");
    switch (deltas.size()) {
        case 1:
            return std::exp(-y + deltas[0] * std::log(y));
        case 2: {
            const double nu = deltas[0] - deltas[1];
            const double root = std::sqrt(y);
            return 2.0 * std::pow(y, 0.5 * (deltas[0] + deltas[1])) *
                   bessel_k(std::abs(nu), 2.0 * root);
        }
        default:
            return meijer_g_mellin_barnes(y, deltas);
    }
}

}  // namespace gosc
