#ifndef GOSC_ERRORS_HPP
#define GOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gosc {

// Thrown when a series or quadrature fails to reach its tolerance within
// the configured budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when E(k) = 0 appears inside a factorial-type product; callers
// handling SUSY-like algebras must switch to the invariant-subspace rules.
class zero_divisor_error : public std::runtime_error {
public:
    explicit zero_divisor_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation is defined only for a subfamily of algebras
// (e.g. closure measures exist for the polynomial family only).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gosc

#endif
