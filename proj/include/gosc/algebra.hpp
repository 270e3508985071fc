#ifndef GOSC_ALGEBRA_HPP
#define GOSC_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gosc/errors.hpp"

namespace gosc {

// Families of generalized oscillator algebras. Each algebra is fixed by the
// nonnegative function E(n) with E(0) = 0 that defines the ladder action
//   a_E |n> = sqrt(E(n)) |n-1>,   a_E^dag |n> = sqrt(E(n+1)) |n+1>.
enum class AlgebraVariant {
    identity,      // E(n) = n (conventional oscillator)
    polynomial,    // E(n) = prod_p (alpha_p n + beta_p)
    f_oscillator,  // E(n) = n f^2(n)
    q_deformed,    // E(n) = sinh(lambda n)/sinh(lambda)
    su11,          // E(n) = alpha1 alpha2 n^2 + alpha2 beta1 n
    susy_cubic,    // E(n+2) = (n+1)(n+1/2-eps)(n+3/2-eps), E(0)=E(1)=0
    distorted,     // E(n+2) = w + n, E(0)=E(1)=0
};

/// Polynomial normal form E(n) = gamma * prod_p (n + delta_p); available for
/// the identity, polynomial and su(1,1) variants, which share the
/// Meijer-G closure measure.
struct PolynomialForm {
    double gamma = 1.0;
    std::vector<double> deltas;
};

/// Declarative description of one algebra: variant tag plus the parameters
/// of that variant. Instances are immutable after construction and all
/// operations on them are pure.
class AlgebraSpec {
public:
    static AlgebraSpec identity();
    static AlgebraSpec polynomial(std::vector<double> alphas, std::vector<double> betas);
    // f^2 given as a named built-in ("q_deformed", parameter lambda).
    static AlgebraSpec f_oscillator_named(const std::string& f_name, double lambda);
    // f^2 tabulated at integer arguments only; evaluation past the table throws.
    static AlgebraSpec f_oscillator_table(std::vector<double> f_squared);
    static AlgebraSpec q_deformed(double lambda);
    static AlgebraSpec su11(double alpha1, double alpha2, double beta1);
    static AlgebraSpec susy_cubic(double epsilon);
    static AlgebraSpec distorted(double w);

    /// Parse the algebra definition format: {"variant": "...", "params": {...}}.
    static AlgebraSpec from_json_text(const std::string& text);
    static AlgebraSpec load_file(const std::string& path);
    std::string to_json_text() const;

    AlgebraVariant variant() const { return variant_; }
    const std::string& name() const { return name_; }

    /// Polynomial normal form when the variant belongs to the polynomial
    /// family (identity, polynomial, su11); nullopt otherwise.
    std::optional<PolynomialForm> polynomial_form() const;

    // Parameter access (meaningful fields depend on the variant).
    const std::vector<double>& alphas() const { return alphas_; }
    const std::vector<double>& betas() const { return betas_; }
    double lambda() const { return lambda_; }
    double alpha1() const { return alpha1_; }
    double alpha2() const { return alpha2_; }
    double beta1() const { return beta1_; }
    double epsilon() const { return epsilon_; }
    double w() const { return w_; }
    const std::vector<double>& f_squared_table() const { return f_table_; }
    const std::string& f_name() const { return f_name_; }

private:
    AlgebraSpec() = default;
    void validate() const;  // throws std::invalid_argument

    AlgebraVariant variant_ = AlgebraVariant::identity;
    std::string name_;
    std::vector<double> alphas_, betas_;
    std::string f_name_;
    std::vector<double> f_table_;
    double lambda_ = 0.0;
    double alpha1_ = 0.0, alpha2_ = 0.0, beta1_ = 0.0;
    double epsilon_ = 0.0;
    double w_ = 0.0;
};

/// Matrix element <n-1| a_E |n> = sqrt(E(n)).
struct LadderElement {
    std::uint64_t n;
    double value;
};

/// E(n) for the given variant. Total on the naturals.
double e_of_n(const AlgebraSpec& spec, std::uint64_t n);

/// ln E(n)! with E(0)! = 1. Uses the Gamma closed form for the polynomial
/// family. Throws zero_divisor_error when some E(k) = 0 for 1 <= k <= n
/// (the SUSY-like variants), signalling the invariant-subspace construction.
double log_e_factorial(const AlgebraSpec& spec, std::uint64_t n);

/// ln prod_{j=1..count} E(base + j); the subspace analogue of the
/// E-factorial used for states built above an annihilated level.
double log_e_product_above(const AlgebraSpec& spec, std::uint64_t base, std::uint64_t count);

/// sqrt(E(n)) for n = 1..cutoff: the sub/superdiagonal of a_E / a_E^dag.
std::vector<LadderElement> ladder_elements(const AlgebraSpec& spec, std::uint64_t cutoff);

/// E(n+1) - E(n): the eigenvalue of [a_E, a_E^dag] on |n>.
double commutator_diagonal(const AlgebraSpec& spec, std::uint64_t n);

/// {n <= cutoff : E(n) = 0}. {0} for the conventional families, {0, 1} for
/// the SUSY-like ones.
std::set<std::uint64_t> annihilated_levels(const AlgebraSpec& spec, std::uint64_t cutoff);

}  // namespace gosc

#endif
