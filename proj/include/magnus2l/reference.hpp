#pragma once

#include <string_view>
#include <vector>

#include "magnus2l/propagator.hpp"

namespace magnus2l {

enum class ReferenceMethod { RK4, Dyson };

/// Amplitudes from a comparison solver, ground state at t0.
struct ReferenceSeries {
    TimeGrid grid;
    std::vector<StateAmplitudes> amplitudes;
    std::vector<double> norms;
    ReferenceMethod method;
    int order;

    std::vector<double> populations() const;
};

/// Classical RK4 on  da/dt = i W e^{iwt} b,  db/dt = i W e^{-iwt} a.
///
/// Throws ResolutionError if the grid under-resolves the carrier or omega
/// and DivergenceError on a non-finite amplitude.
ReferenceSeries rk4_propagate(const PulseSpec& pulse, double omega, const TimeGrid& grid);

/// Same integration at `density` times the grid, sampled back onto `grid`.
ReferenceSeries rk4_oracle(const PulseSpec& pulse, double omega, const TimeGrid& grid, std::size_t density = 4);

/// Ground state propagated by the Dyson series truncated after `order`
/// (1..4) time-ordered terms. The norm is not restored. Throws
/// UnsupportedOrderError outside 1..4.
ReferenceSeries dyson_series(const PulseSpec& pulse, double omega, const TimeGrid& grid, int order);

}  // namespace magnus2l
