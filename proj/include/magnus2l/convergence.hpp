#pragma once

#include <string>
#include <string_view>

#include "magnus2l/pulse.hpp"

namespace magnus2l {

enum class RcPreset { PechukasLight, Blanes, MoanNiesen, Custom };

/// Convergence radius r_c of the Magnus series with its provenance.
struct ConvergenceRadius {
    RcPreset preset;
    double value;

    static ConvergenceRadius pechukas_light();  // log 2
    static ConvergenceRadius blanes();          // 1.08686
    static ConvergenceRadius moan_niesen();     // pi
    static ConvergenceRadius custom(double value);

    /// Accepts "pechukas-light", "blanes", "moan-niesen" or a positive number.
    static ConvergenceRadius parse(std::string_view text);

    std::string name() const;
};

struct ConvergenceReport {
    double integral_value;  // int ||-iH|| dt = sqrt(2) * area
    double area;
    double r_c;
    RcPreset preset;
    bool satisfied;  // integral_value < r_c strictly, outside a 1e-12 relative boundary band
    double margin;   // r_c - integral_value
};

/// Evaluates the Frobenius-norm convergence bound for `pulse` over `grid`.
/// Reports; never throws on a failed bound.
ConvergenceReport convergence_gate(const PulseSpec& pulse, const TimeGrid& grid, const ConvergenceRadius& radius);

std::string preset_name(RcPreset preset);

}  // namespace magnus2l
