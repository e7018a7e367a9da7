#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magnus2l/convergence.hpp"
#include "magnus2l/pulse.hpp"

namespace magnus2l {

enum class Method { Magnus2, Magnus4, Dyson4, RK4 };

inline constexpr Method kAllMethods[] = {Method::Magnus2, Method::Magnus4, Method::Dyson4, Method::RK4};

std::string method_name(Method m);
Method parse_method(std::string_view name);

/// Comma separated method names, returned deduplicated in canonical order.
std::vector<Method> parse_method_list(std::string_view list);

enum class ShapeKind { GaussianCosine, Square };

/// One experiment: pulse, atomic frequency, grid and what to run.
///
/// Exactly one of omega0/area fixes the amplitude; exactly one of nu/delta
/// (delta = omega - nu) fixes the carrier of a gaussian-cosine pulse.
struct Scenario {
    ShapeKind shape = ShapeKind::GaussianCosine;
    std::optional<double> omega0;
    std::optional<double> area;
    double a = 0.0;
    double tau = 0.0;
    std::optional<double> nu;
    std::optional<double> delta;
    std::optional<double> t_on;
    std::optional<double> t_off;
    double omega = 1.0;
    double t0 = 0.0;
    double t_end = 0.0;
    std::size_t n_steps = 0;
    std::vector<Method> methods{std::begin(kAllMethods), std::end(kAllMethods)};
    ConvergenceRadius radius = ConvergenceRadius::moan_niesen();
    bool enforce_gate = false;

    /// Throws ConfigError when an invariant is broken.
    void validate() const;

    TimeGrid grid() const;
    double carrier() const;

    /// Pulse with its amplitude resolved (rescaled to `area` when given).
    PulseSpec pulse() const;

    bool runs(Method m) const;
};

/// Parses the flat `key = value` format; `#` starts a comment.
///
/// Keys: shape, omega0 | area, a, tau, nu | delta, t_on, t_off, omega, t0,
/// t_end, n_steps, methods, r_c_preset, enforce_gate. Numeric values accept
/// `pi`, `pi/x` and `pi*x` besides plain numbers.
Scenario parse_scenario(std::string_view text);

Scenario load_scenario(const std::filesystem::path& path);

}  // namespace magnus2l
