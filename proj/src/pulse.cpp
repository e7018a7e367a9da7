#include "magnus2l/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "magnus2l/errors.hpp"

namespace magnus2l {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double interpolate(const Sampled& s, double t) {
    if (!(t >= s.times.front() && t <= s.times.back())) {
        throw RangeError("sampled pulse evaluated at t=" + std::to_string(t) + " outside [" +
                         std::to_string(s.times.front()) + ", " + std::to_string(s.times.back()) + "]");
    }
    auto hi = std::upper_bound(s.times.begin(), s.times.end(), t);
    if (hi == s.times.end()) return s.values.back();
    const auto i = static_cast<std::size_t>(hi - s.times.begin());
    const double t_lo = s.times[i - 1];
    const double t_hi = s.times[i];
    const double w = (t - t_lo) / (t_hi - t_lo);
    return (1.0 - w) * s.values[i - 1] + w * s.values[i];
}

}  // namespace

PulseSpec PulseSpec::gaussian_cosine(double omega0, double a, double tau, double nu) {
    if (!std::isfinite(omega0) || !std::isfinite(a) || !std::isfinite(tau) || !std::isfinite(nu)) {
        throw ArgumentError("gaussian-cosine parameters must be finite");
    }
    if (!(a > 0.0)) throw ArgumentError("gaussian-cosine envelope rate a must be > 0");
    return PulseSpec(GaussianCosine{omega0, a, tau, nu});
}

PulseSpec PulseSpec::square(double omega0, double t_on, double t_off) {
    if (!std::isfinite(omega0) || !std::isfinite(t_on) || !std::isfinite(t_off)) {
        throw ArgumentError("square pulse parameters must be finite");
    }
    if (!(t_off > t_on)) throw ArgumentError("square pulse needs t_off > t_on");
    return PulseSpec(Square{omega0, t_on, t_off});
}

PulseSpec PulseSpec::sampled(std::vector<double> times, std::vector<double> values) {
    if (times.size() < 2 || times.size() != values.size()) {
        throw ArgumentError("sampled pulse needs >= 2 points and matching times/values");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || !std::isfinite(values[i])) {
            throw ArgumentError("sampled pulse contains non-finite entries");
        }
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw ArgumentError("sampled pulse times must be strictly increasing");
        }
    }
    return PulseSpec(Sampled{std::move(times), std::move(values)});
}

double PulseSpec::amplitude() const {
    return std::visit(overloaded{
                          [](const GaussianCosine& g) { return g.omega0; },
                          [](const Square& s) { return s.omega0; },
                          [](const Sampled& s) {
                              double m = 0.0;
                              for (double v : s.values) m = std::max(m, std::abs(v));
                              return m;
                          },
                      },
                      shape_);
}

PulseSpec PulseSpec::scaled(double factor) const {
    return std::visit(overloaded{
                          [&](GaussianCosine g) {
                              g.omega0 *= factor;
                              return PulseSpec(g);
                          },
                          [&](Square s) {
                              s.omega0 *= factor;
                              return PulseSpec(s);
                          },
                          [&](Sampled s) {
                              for (double& v : s.values) v *= factor;
                              return PulseSpec(std::move(s));
                          },
                      },
                      shape_);
}

double PulseSpec::carrier_frequency() const {
    if (const auto* g = std::get_if<GaussianCosine>(&shape_)) return std::abs(g->nu);
    return 0.0;
}

TimeGrid::TimeGrid(double t0, double t_end, std::size_t n_steps) : t0_(t0), t_end_(t_end), n_steps_(n_steps) {
    if (!std::isfinite(t0) || !std::isfinite(t_end) || !(t_end > t0)) {
        throw ArgumentError("time grid needs finite t_end > t0");
    }
    if (n_steps == 0 || n_steps % 2 != 0) {
        throw ArgumentError("time grid needs a positive even number of steps, got " + std::to_string(n_steps));
    }
}

double TimeGrid::time(std::size_t k) const {
    // Last point pinned to t_end so the window is reproduced exactly.
    if (k == n_steps_) return t_end_;
    return t0_ + static_cast<double>(k) * step();
}

double TimeGrid::points_per_period(double frequency) const {
    if (frequency == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::numbers::pi / (std::abs(frequency) * step());
}

void require_resolved(const TimeGrid& grid, double frequency, const char* what) {
    const double ppp = grid.points_per_period(frequency);
    if (ppp < kMinPointsPerPeriod) {
        throw ResolutionError(std::string("grid resolves ") + what + " frequency " + std::to_string(frequency) +
                              " with only " + std::to_string(ppp) + " points per period (need >= 20)");
    }
}

double evaluate_rabi(const PulseSpec& pulse, double t) {
    return std::visit(overloaded{
                          [t](const GaussianCosine& g) {
                              const double d = t - g.tau;
                              return g.omega0 * std::exp(-g.a * d * d) * std::cos(g.nu * d);
                          },
                          [t](const Square& s) { return (t >= s.t_on && t <= s.t_off) ? s.omega0 : 0.0; },
                          [t](const Sampled& s) { return interpolate(s, t); },
                      },
                      pulse.shape());
}

std::vector<double> sample_rabi(const PulseSpec& pulse, const TimeGrid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = evaluate_rabi(pulse, grid.time(k));
    return out;
}

double pulse_area(const PulseSpec& pulse, const TimeGrid& grid) {
    require_resolved(grid, pulse.carrier_frequency(), "carrier");
    const auto omega = sample_rabi(pulse, grid);
    double odd = 0.0;
    double even = 0.0;
    const std::size_t n = grid.n_steps();
    for (std::size_t k = 1; k < n; ++k) {
        (k % 2 ? odd : even) += std::abs(omega[k]);
    }
    return grid.step() / 3.0 * (std::abs(omega[0]) + 4.0 * odd + 2.0 * even + std::abs(omega[n]));
}

PulseSpec scale_to_area(const PulseSpec& pulse, double target_area, const TimeGrid& grid) {
    if (!(target_area > 0.0) || !std::isfinite(target_area)) {
        throw ArgumentError("target area must be finite and > 0");
    }
    const double area = pulse_area(pulse, grid);
    if (area == 0.0) throw DegeneratePulseError("cannot rescale a pulse with zero area");
    return pulse.scaled(target_area / area);
}

}  // namespace magnus2l
