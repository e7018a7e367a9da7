#pragma once

#include <map>
#include <span>
#include <vector>

#include "magnus2l/convergence.hpp"
#include "magnus2l/scenario.hpp"

namespace magnus2l {

struct MethodSeries {
    std::vector<double> population;  // excited-state population
    std::vector<double> norm;        // |a|^2 + |b|^2
    double wall_time_ms = 0.0;
};

struct ErrorMetrics {
    double max = 0.0;
    double rms = 0.0;
};

/// Everything a scenario run produces. Method maps are keyed in canonical
/// method order; errors are relative to the RK4 oracle and only present
/// when RK4 ran.
struct SimulationResult {
    Scenario scenario;
    std::vector<double> times;
    double area = 0.0;
    double omega0 = 0.0;  // resolved amplitude
    ConvergenceReport convergence{};
    std::map<Method, MethodSeries> series;
    std::map<Method, ErrorMetrics> errors;
    double kernel_wall_time_ms = 0.0;
};

/// Max and RMS of |x - reference| over the grid.
ErrorMetrics deviation(std::span<const double> x, std::span<const double> reference);

/// Runs every requested method on the scenario grid. RK4 is integrated at
/// 4x the grid density and sampled back. Throws GateError when the
/// convergence bound fails and the scenario enforces it.
SimulationResult run_scenario(const Scenario& s);

struct ScalingRow {
    double scale;
    double error_m2;
    double error_m4;
};

struct ScalingStudy {
    std::vector<ScalingRow> rows;
    double slope_m2;  // least-squares d log(error) / d log(scale); NaN if any error is 0
    double slope_m4;
};

/// Rescales the scenario amplitude by each factor and measures the max
/// population deviation of Magnus-2/4 from RK4. Needs >= 3 positive scales.
ScalingStudy order_scaling_study(const Scenario& s, std::span<const double> scales);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace magnus2l
