#include "magnus2l/propagator.hpp"

#include <cmath>

namespace magnus2l {

namespace {
constexpr cplx kI{0.0, 1.0};
constexpr double kSincThreshold = 1e-6;
}  // namespace

double beta_magnitude(cplx theta, double phi) { return std::hypot(std::abs(theta), phi); }

double sinc(double beta) {
    if (beta < kSincThreshold) {
        const double b2 = beta * beta;
        return 1.0 - b2 / 6.0 + b2 * b2 / 120.0;
    }
    return std::sin(beta) / beta;
}

Propagator assemble_unitary(cplx theta, double phi) {
    const double beta = beta_magnitude(theta, phi);
    const double c = std::cos(beta);
    const double s = sinc(beta);
    Propagator p{Eigen::Matrix2cd{}, beta, theta, phi};
    p.u(0, 0) = c - kI * phi * s;
    p.u(0, 1) = kI * theta * s;
    p.u(1, 0) = kI * std::conj(theta) * s;
    p.u(1, 1) = c + kI * phi * s;
    return p;
}

StateAmplitudes propagate_ground(const Propagator& p) { return {p.u(0, 1), p.u(1, 1)}; }

std::vector<StateAmplitudes> magnus_states(const KernelSeries& k, int order) {
    const auto theta = theta_total(k, order);
    const auto phi = phi_total(k, order);
    std::vector<StateAmplitudes> out(theta.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = propagate_ground(assemble_unitary(theta[i], phi[i]));
    return out;
}

std::vector<double> magnus_population_series(const KernelSeries& k, int order) {
    const auto states = magnus_states(k, order);
    std::vector<double> out(states.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = states[i].excited_population();
    return out;
}

}  // namespace magnus2l
