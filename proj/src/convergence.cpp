#include "magnus2l/convergence.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "magnus2l/errors.hpp"

namespace magnus2l {

namespace {
// Integrals this close to r_c count as on the boundary, which the strict
// bound excludes; rescaling to an area of exactly r_c/sqrt(2) lands within
// a few ulps on either side.
constexpr double kBoundaryBand = 1e-12;
}  // namespace

ConvergenceRadius ConvergenceRadius::pechukas_light() { return {RcPreset::PechukasLight, std::numbers::ln2}; }
ConvergenceRadius ConvergenceRadius::blanes() { return {RcPreset::Blanes, 1.08686}; }
ConvergenceRadius ConvergenceRadius::moan_niesen() { return {RcPreset::MoanNiesen, std::numbers::pi}; }

ConvergenceRadius ConvergenceRadius::custom(double value) {
    if (!(value > 0.0) || !std::isfinite(value)) throw ArgumentError("custom r_c must be finite and > 0");
    return {RcPreset::Custom, value};
}

ConvergenceRadius ConvergenceRadius::parse(std::string_view text) {
    if (text == "pechukas-light") return pechukas_light();
    if (text == "blanes") return blanes();
    if (text == "moan-niesen") return moan_niesen();
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("unknown r_c preset '" + std::string(text) +
                          "' (expected pechukas-light, blanes, moan-niesen or a number)");
    }
    if (!(value > 0.0) || !std::isfinite(value)) throw ConfigError("r_c must be finite and > 0");
    return custom(value);
}

std::string ConvergenceRadius::name() const { return preset_name(preset); }

std::string preset_name(RcPreset preset) {
    switch (preset) {
        case RcPreset::PechukasLight: return "pechukas-light";
        case RcPreset::Blanes: return "blanes";
        case RcPreset::MoanNiesen: return "moan-niesen";
        case RcPreset::Custom: return "custom";
    }
    return "custom";
}

ConvergenceReport convergence_gate(const PulseSpec& pulse, const TimeGrid& grid, const ConvergenceRadius& radius) {
    // ||-iH||_F = sqrt(2) |Omega| for the off-diagonal coupling.
    const double area = pulse_area(pulse, grid);
    const double integral = std::numbers::sqrt2 * area;
    const bool inside = integral < radius.value * (1.0 - kBoundaryBand);
    return {integral, area, radius.value, radius.preset, inside, radius.value - integral};
}

}  // namespace magnus2l
