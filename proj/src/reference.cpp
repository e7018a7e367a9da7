#include "magnus2l/reference.hpp"

#include <cmath>
#include <string>

#include "magnus2l/errors.hpp"

namespace magnus2l {

namespace {

constexpr cplx kI{0.0, 1.0};

struct Derivative {
    const PulseSpec& pulse;
    double omega;

    StateAmplitudes operator()(double t, const StateAmplitudes& s) const {
        const double rabi = evaluate_rabi(pulse, t);
        const cplx phase = std::polar(1.0, omega * t);
        return {kI * rabi * phase * s.b, kI * rabi * std::conj(phase) * s.a};
    }
};

StateAmplitudes axpy(const StateAmplitudes& x, double h, const StateAmplitudes& k) {
    return {x.a + h * k.a, x.b + h * k.b};
}

std::vector<double> norms_of(const std::vector<StateAmplitudes>& amps) {
    std::vector<double> out(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) out[i] = amps[i].norm();
    return out;
}

}  // namespace

std::vector<double> ReferenceSeries::populations() const {
    std::vector<double> out(amplitudes.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = amplitudes[i].excited_population();
    return out;
}

ReferenceSeries rk4_propagate(const PulseSpec& pulse, double omega, const TimeGrid& grid) {
    require_resolved(grid, pulse.carrier_frequency(), "carrier");
    require_resolved(grid, omega, "atomic");

    const Derivative f{pulse, omega};
    const double h = grid.step();
    std::vector<StateAmplitudes> amps(grid.size());
    amps[0] = {0.0, 1.0};
    for (std::size_t k = 0; k + 1 < amps.size(); ++k) {
        const double t = grid.time(k);
        const auto& y = amps[k];
        const auto k1 = f(t, y);
        const auto k2 = f(t + 0.5 * h, axpy(y, 0.5 * h, k1));
        const auto k3 = f(t + 0.5 * h, axpy(y, 0.5 * h, k2));
        const auto k4 = f(t + h, axpy(y, h, k3));
        amps[k + 1] = {y.a + h / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a),
                       y.b + h / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b)};
        if (!std::isfinite(amps[k + 1].norm())) {
            throw DivergenceError("RK4 produced a non-finite state at t=" + std::to_string(grid.time(k + 1)));
        }
    }
    auto norms = norms_of(amps);
    return {grid, std::move(amps), std::move(norms), ReferenceMethod::RK4, 4};
}

ReferenceSeries rk4_oracle(const PulseSpec& pulse, double omega, const TimeGrid& grid, std::size_t density) {
    if (density == 0) throw ArgumentError("oracle density must be positive");
    const auto fine = rk4_propagate(pulse, omega, grid.refined(density));
    std::vector<StateAmplitudes> amps(grid.size());
    for (std::size_t k = 0; k < amps.size(); ++k) amps[k] = fine.amplitudes[k * density];
    auto norms = norms_of(amps);
    return {grid, std::move(amps), std::move(norms), ReferenceMethod::RK4, 4};
}

ReferenceSeries dyson_series(const PulseSpec& pulse, double omega, const TimeGrid& grid, int order) {
    if (order < 1 || order > 4) {
        throw UnsupportedOrderError("Dyson series implemented for orders 1..4, got " + std::to_string(order));
    }
    require_resolved(grid, pulse.carrier_frequency(), "carrier");
    require_resolved(grid, omega, "atomic");

    // Each -iH factor acting on |b> raises to |a> with W e^{+iwt}, on |a> lowers
    // with W e^{-iwt}, times i. The latest time is the outermost integral.
    using enum Phase;
    const auto g = phase_factors(pulse, omega, grid);
    std::vector<StateAmplitudes> amps(grid.size(), StateAmplitudes{0.0, 1.0});
    auto add = [&](const std::vector<cplx>& term, cplx coeff, bool excited) {
        for (std::size_t k = 0; k < amps.size(); ++k) (excited ? amps[k].a : amps[k].b) += coeff * term[k];
    };
    add(nested_integral(g, {Plus}, grid), kI, true);
    if (order >= 2) add(nested_integral(g, {Minus, Plus}, grid), -1.0, false);
    if (order >= 3) add(nested_integral(g, {Plus, Minus, Plus}, grid), -kI, true);
    if (order >= 4) add(nested_integral(g, {Minus, Plus, Minus, Plus}, grid), 1.0, false);

    auto norms = norms_of(amps);
    return {grid, std::move(amps), std::move(norms), ReferenceMethod::Dyson, order};
}

}  // namespace magnus2l
