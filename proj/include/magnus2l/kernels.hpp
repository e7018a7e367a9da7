#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "magnus2l/pulse.hpp"

namespace magnus2l {

using cplx = std::complex<double>;

/// C[k] ~ integral of f from t0 to t_k on the grid, C[0] = 0.
///
/// Even indices use composite Simpson; the odd point inside each pair of
/// intervals integrates the quadratic through the pair, so every entry
/// carries an O(h^4) error for smooth f. Throws ShapeError on a length
/// mismatch.
std::vector<cplx> cumulative_integral(std::span<const cplx> samples, const TimeGrid& grid);

enum class Phase { Plus, Minus };

/// The two separable factors g+(t) = Omega(t) e^{+i w t} and g-(t) = conj(g+(t)).
struct PhaseFactors {
    std::vector<cplx> plus;
    std::vector<cplx> minus;

    const std::vector<cplx>& operator[](Phase p) const { return p == Phase::Plus ? plus : minus; }
};

PhaseFactors phase_factors(const PulseSpec& pulse, double omega, const TimeGrid& grid);

/// Iterated integral of separable phase factors, outermost variable first:
///
///   C^{x1..xn}(t) = int_0^t g_x1(t1) int_0^t1 g_x2(t2) ... int_0^t(n-1) g_xn(tn)
///
/// evaluated by cascading cumulative_integral, O(N) per level.
std::vector<cplx> nested_integral(const PhaseFactors& g, std::initializer_list<Phase> phases, const TimeGrid& grid);

/// Cumulative Magnus kernels of the two-level interaction-picture Hamiltonian.
/// theta1/theta3 are the first two odd (off-diagonal) contributions to the
/// complex pulse area, phi2/phi4 the first two even (diagonal) contributions
/// to the phase shift. Entry 0 of every array is exactly zero.
struct KernelSeries {
    TimeGrid grid;
    double omega;
    std::vector<cplx> theta1;
    std::vector<cplx> theta3;
    std::vector<double> phi2;
    std::vector<double> phi4;
};

/// Throws ResolutionError unless the grid carries >= 20 points per period of
/// both the carrier and omega, and DivergenceError if a phase cascade is not
/// real to 1e-10 relative.
KernelSeries compute_kernels(const PulseSpec& pulse, double omega, const TimeGrid& grid);

/// Complex pulse area truncated at Magnus order 2 (theta1) or 4 (theta1 + theta3).
std::vector<cplx> theta_total(const KernelSeries& k, int order);

/// Phase shift truncated at Magnus order 2 (phi2) or 4 (phi2 + phi4).
std::vector<double> phi_total(const KernelSeries& k, int order);

}  // namespace magnus2l
