#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "magnus2l/kernels.hpp"

namespace magnus2l {

/// U = exp(-i [[phi, -theta], [-conj(theta), -phi]]) in the basis (|a>, |b>),
/// together with the parameters it was built from.
struct Propagator {
    Eigen::Matrix2cd u;
    double beta;
    cplx theta;
    double phi;
};

/// Excited (a) and ground (b) amplitudes.
struct StateAmplitudes {
    cplx a;
    cplx b;

    double excited_population() const { return std::norm(a); }
    double norm() const { return std::norm(a) + std::norm(b); }
};

/// sqrt(|theta|^2 + phi^2).
double beta_magnitude(cplx theta, double phi);

/// sin(beta)/beta, switching to its Taylor series below beta = 1e-6.
double sinc(double beta);

/// Closed-form SU(2) exponential; unitary with unit determinant by construction.
Propagator assemble_unitary(cplx theta, double phi);

/// U applied to the ground state: (u12, u22).
StateAmplitudes propagate_ground(const Propagator& p);

/// State at each grid point of the order-2 or order-4 truncated Magnus
/// propagator, starting in the ground state. Throws ArgumentError for other orders.
std::vector<StateAmplitudes> magnus_states(const KernelSeries& k, int order);

/// Excited-state population |a(t)|^2 from magnus_states.
std::vector<double> magnus_population_series(const KernelSeries& k, int order);

}  // namespace magnus2l
