#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace magnus2l {

// Units: hbar = 1, frequencies in units of the atomic transition frequency,
// times in its inverse. Pulses are described directly by the Rabi frequency
// Omega(t) = dipole * E(t) / hbar.

/// Omega0 * exp(-a (t - tau)^2) * cos(nu (t - tau)).
struct GaussianCosine {
    double omega0;
    double a;
    double tau;
    double nu;
};

/// Omega0 on the closed interval [t_on, t_off], zero elsewhere.
struct Square {
    double omega0;
    double t_on;
    double t_off;
};

/// Tabulated Omega(t), linearly interpolated.
struct Sampled {
    std::vector<double> times;
    std::vector<double> values;
};

class PulseSpec {
public:
    using Shape = std::variant<GaussianCosine, Square, Sampled>;

    // Validating constructors; throw ArgumentError on a broken invariant.
    static PulseSpec gaussian_cosine(double omega0, double a, double tau, double nu);
    static PulseSpec square(double omega0, double t_on, double t_off);
    static PulseSpec sampled(std::vector<double> times, std::vector<double> values);

    const Shape& shape() const { return shape_; }

    /// Peak amplitude parameter; for sampled pulses the largest |value|.
    double amplitude() const;

    /// Copy with the amplitude multiplied by `factor`.
    PulseSpec scaled(double factor) const;

    /// Angular frequency the grid has to resolve; 0 when the pulse has no carrier.
    double carrier_frequency() const;

private:
    explicit PulseSpec(Shape shape) : shape_(std::move(shape)) {}

    Shape shape_;
};

/// Uniform discretisation of [t0, t_end] with an even number of steps.
class TimeGrid {
public:
    TimeGrid(double t0, double t_end, std::size_t n_steps);

    double t0() const { return t0_; }
    double t_end() const { return t_end_; }
    std::size_t n_steps() const { return n_steps_; }
    std::size_t size() const { return n_steps_ + 1; }
    double step() const { return (t_end_ - t0_) / static_cast<double>(n_steps_); }
    double time(std::size_t k) const;

    /// Points per period 2*pi/frequency; +inf for frequency 0.
    double points_per_period(double frequency) const;

    /// New grid over the same interval with `factor` times as many steps.
    TimeGrid refined(std::size_t factor) const { return {t0_, t_end_, n_steps_ * factor}; }

    bool operator==(const TimeGrid&) const = default;

private:
    double t0_;
    double t_end_;
    std::size_t n_steps_;
};

inline constexpr double kMinPointsPerPeriod = 20.0;

/// Throws ResolutionError if `grid` has fewer than 20 points per period of `frequency`.
void require_resolved(const TimeGrid& grid, double frequency, const char* what);

/// Omega(t). Throws RangeError for sampled pulses outside their table.
double evaluate_rabi(const PulseSpec& pulse, double t);

/// Omega sampled on every grid point.
std::vector<double> sample_rabi(const PulseSpec& pulse, const TimeGrid& grid);

/// Integral of |Omega| over the grid window, composite Simpson on pointwise |Omega|.
double pulse_area(const PulseSpec& pulse, const TimeGrid& grid);

/// Copy of `pulse` whose area on `grid` equals `target_area`.
PulseSpec scale_to_area(const PulseSpec& pulse, double target_area, const TimeGrid& grid);

}  // namespace magnus2l
