#ifndef GOSC_TWO_MODE_HPP
#define GOSC_TWO_MODE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

namespace gosc {

/// Pure state of the two beam-splitter channels on the truncated two-mode
/// Fock basis. amplitude(n, m) is the coefficient of |n, m> with n photons
/// in the horizontal channel and m in the vertical one; only the triangle
/// n + m <= cutoff_total is populated (the splitter conserves n + m).
class TwoModeState {
public:
    explicit TwoModeState(std::size_t cutoff_total, double tail_bound = 0.0)
        : amp_(Eigen::MatrixXcd::Zero(cutoff_total + 1, cutoff_total + 1)),
          cutoff_total_(cutoff_total),
          tail_bound_(tail_bound) {}

    std::size_t cutoff_total() const { return cutoff_total_; }
    double tail_bound() const { return tail_bound_; }

    std::complex<double>& amplitude(std::size_t n, std::size_t m) { return amp_(n, m); }
    std::complex<double> amplitude(std::size_t n, std::size_t m) const { return amp_(n, m); }

    const Eigen::MatrixXcd& amplitudes() const { return amp_; }
    Eigen::MatrixXcd& amplitudes() { return amp_; }

    double norm() const { return amp_.norm(); }

private:
    Eigen::MatrixXcd amp_;
    std::size_t cutoff_total_;
    double tail_bound_;
};

/// Joint photon-counting probabilities P(n, m) over the same triangle.
class JointDistribution {
public:
    explicit JointDistribution(std::size_t cutoff_total, double tail_bound = 0.0)
        : probs_(Eigen::MatrixXd::Zero(cutoff_total + 1, cutoff_total + 1)),
          cutoff_total_(cutoff_total),
          tail_bound_(tail_bound) {}

    std::size_t cutoff_total() const { return cutoff_total_; }
    double tail_bound() const { return tail_bound_; }

    double& prob(std::size_t n, std::size_t m) { return probs_(n, m); }
    double prob(std::size_t n, std::size_t m) const { return probs_(n, m); }

    const Eigen::MatrixXd& probs() const { return probs_; }
    double total_mass() const { return probs_.sum(); }

private:
    Eigen::MatrixXd probs_;
    std::size_t cutoff_total_;
    double tail_bound_;
};

}  // namespace gosc

#endif
