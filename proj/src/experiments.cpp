#include "magnus2l/experiments.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "magnus2l/errors.hpp"
#include "magnus2l/kernels.hpp"
#include "magnus2l/propagator.hpp"
#include "magnus2l/reference.hpp"

namespace magnus2l {

namespace {

constexpr std::size_t kOracleDensity = 4;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

MethodSeries from_states(const std::vector<StateAmplitudes>& states) {
    MethodSeries out;
    out.population.resize(states.size());
    out.norm.resize(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        out.population[i] = states[i].excited_population();
        out.norm[i] = states[i].norm();
    }
    return out;
}

}  // namespace

ErrorMetrics deviation(std::span<const double> x, std::span<const double> reference) {
    if (x.size() != reference.size() || x.empty()) throw ShapeError("deviation: series lengths differ");
    ErrorMetrics m;
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = std::abs(x[i] - reference[i]);
        m.max = std::max(m.max, d);
        sq += d * d;
    }
    m.rms = std::sqrt(sq / static_cast<double>(x.size()));
    return m;
}

SimulationResult run_scenario(const Scenario& s) {
    s.validate();
    const TimeGrid grid = s.grid();
    const PulseSpec pulse = s.pulse();

    SimulationResult r;
    r.scenario = s;
    r.times.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) r.times[k] = grid.time(k);
    r.convergence = convergence_gate(pulse, grid, s.radius);
    r.area = r.convergence.area;
    r.omega0 = pulse.amplitude();

    if (s.enforce_gate && !r.convergence.satisfied) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "convergence gate failed under preset " << s.radius.name() << " (r_c=" << s.radius.value
            << "): margin " << r.convergence.margin;
        throw GateError(msg.str());
    }

    if (s.runs(Method::Magnus2) || s.runs(Method::Magnus4)) {
        auto start = Clock::now();
        const KernelSeries kernels = compute_kernels(pulse, s.omega, grid);
        r.kernel_wall_time_ms = elapsed_ms(start);
        for (auto [method, order] : {std::pair{Method::Magnus2, 2}, std::pair{Method::Magnus4, 4}}) {
            if (!s.runs(method)) continue;
            start = Clock::now();
            auto series = from_states(magnus_states(kernels, order));
            series.wall_time_ms = elapsed_ms(start) + r.kernel_wall_time_ms;
            r.series.emplace(method, std::move(series));
        }
    }
    if (s.runs(Method::Dyson4)) {
        const auto start = Clock::now();
        auto series = from_states(dyson_series(pulse, s.omega, grid, 4).amplitudes);
        series.wall_time_ms = elapsed_ms(start);
        r.series.emplace(Method::Dyson4, std::move(series));
    }
    if (s.runs(Method::RK4)) {
        const auto start = Clock::now();
        auto series = from_states(rk4_oracle(pulse, s.omega, grid, kOracleDensity).amplitudes);
        series.wall_time_ms = elapsed_ms(start);
        r.series.emplace(Method::RK4, std::move(series));

        const auto& truth = r.series.at(Method::RK4).population;
        for (const auto& [method, series] : r.series) {
            if (method != Method::RK4) r.errors.emplace(method, deviation(series.population, truth));
        }
    }
    return r;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw ArgumentError("log_log_slope needs >= 2 matching points");
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (n * sxy - sx * sy) / denom;
}

ScalingStudy order_scaling_study(const Scenario& s, std::span<const double> scales) {
    if (scales.size() < 3) throw ArgumentError("scaling study needs at least 3 scales");
    for (double f : scales) {
        if (!(f > 0.0) || !std::isfinite(f)) throw ArgumentError("scales must be finite and > 0");
    }
    s.validate();
    const TimeGrid grid = s.grid();
    const PulseSpec base = s.pulse();

    ScalingStudy study;
    std::vector<double> e2, e4;
    for (double f : scales) {
        const PulseSpec pulse = base.scaled(f);
        const KernelSeries k = compute_kernels(pulse, s.omega, grid);
        const auto truth = rk4_oracle(pulse, s.omega, grid, kOracleDensity).populations();
        const double m2 = deviation(magnus_population_series(k, 2), truth).max;
        const double m4 = deviation(magnus_population_series(k, 4), truth).max;
        study.rows.push_back({f, m2, m4});
        e2.push_back(m2);
        e4.push_back(m4);
    }
    std::vector<double> x(scales.begin(), scales.end());
    study.slope_m2 = log_log_slope(x, e2);
    study.slope_m4 = log_log_slope(x, e4);
    return study;
}

}  // namespace magnus2l
