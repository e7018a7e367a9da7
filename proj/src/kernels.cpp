#include "magnus2l/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "magnus2l/errors.hpp"

namespace magnus2l {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kRealityTolerance = 1e-10;

void require_order(int order) {
    if (order != 2 && order != 4) {
        throw ArgumentError("Magnus order must be 2 or 4, got " + std::to_string(order));
    }
}

// Drop the imaginary part of a cascade that is real by symmetry, after
// checking the residue is negligible.
std::vector<double> checked_real(const std::vector<cplx>& v, const char* name) {
    double re_max = 0.0;
    double im_max = 0.0;
    for (const auto& z : v) {
        re_max = std::max(re_max, std::abs(z.real()));
        im_max = std::max(im_max, std::abs(z.imag()));
    }
    if (!std::isfinite(re_max) || !std::isfinite(im_max)) {
        throw DivergenceError(std::string(name) + " cascade is not finite");
    }
    if (im_max > kRealityTolerance * re_max) {
        throw DivergenceError(std::string(name) + " cascade has imaginary residue " + std::to_string(im_max) +
                              " against real magnitude " + std::to_string(re_max));
    }
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](const cplx& z) { return z.real(); });
    return out;
}

}  // namespace

std::vector<cplx> cumulative_integral(std::span<const cplx> samples, const TimeGrid& grid) {
    if (samples.size() != grid.size()) {
        throw ShapeError("cumulative_integral: " + std::to_string(samples.size()) + " samples for a grid of " +
                         std::to_string(grid.size()) + " points");
    }
    const double h = grid.step();
    std::vector<cplx> out(samples.size());
    out[0] = 0.0;
    for (std::size_t k = 0; k + 2 < samples.size(); k += 2) {
        const cplx& f0 = samples[k];
        const cplx& f1 = samples[k + 1];
        const cplx& f2 = samples[k + 2];
        out[k + 1] = out[k] + (h / 12.0) * (5.0 * f0 + 8.0 * f1 - f2);
        out[k + 2] = out[k] + (h / 3.0) * (f0 + 4.0 * f1 + f2);
    }
    return out;
}

PhaseFactors phase_factors(const PulseSpec& pulse, double omega, const TimeGrid& grid) {
    PhaseFactors g;
    g.plus.resize(grid.size());
    g.minus.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid.time(k);
        g.plus[k] = evaluate_rabi(pulse, t) * std::polar(1.0, omega * t);
        g.minus[k] = std::conj(g.plus[k]);
    }
    return g;
}

std::vector<cplx> nested_integral(const PhaseFactors& g, std::initializer_list<Phase> phases,
                                  const TimeGrid& grid) {
    if (phases.size() == 0) throw ArgumentError("nested_integral needs at least one phase factor");
    std::vector<cplx> acc;
    std::vector<cplx> integrand(grid.size());
    for (auto it = std::rbegin(phases); it != std::rend(phases); ++it) {
        const auto& f = g[*it];
        if (acc.empty()) {
            acc = cumulative_integral(f, grid);
        } else {
            for (std::size_t k = 0; k < integrand.size(); ++k) integrand[k] = f[k] * acc[k];
            acc = cumulative_integral(integrand, grid);
        }
    }
    return acc;
}

KernelSeries compute_kernels(const PulseSpec& pulse, double omega, const TimeGrid& grid) {
    require_resolved(grid, pulse.carrier_frequency(), "carrier");
    require_resolved(grid, omega, "atomic");

    using enum Phase;
    const auto g = phase_factors(pulse, omega, grid);
    const std::size_t n = grid.size();

    KernelSeries k{grid, omega, {}, std::vector<cplx>(n), {}, {}};

    k.theta1 = nested_integral(g, {Plus}, grid);

    // theta3: integrand (1/3) W1 W2 W3 [e^{iw(-t1+t2+t3)} + e^{iw(t1+t2-t3)} - 2 e^{iw(t1-t2+t3)}]
    // with t1 > t2 > t3.
    const auto a = nested_integral(g, {Minus, Plus, Plus}, grid);
    const auto b = nested_integral(g, {Plus, Plus, Minus}, grid);
    const auto c = nested_integral(g, {Plus, Minus, Plus}, grid);
    for (std::size_t i = 0; i < n; ++i) k.theta3[i] = (a[i] + b[i] - 2.0 * c[i]) / 3.0;

    // phi2: integrand W1 W2 sin(w(t1 - t2)).
    const auto c2 = nested_integral(g, {Plus, Minus}, grid);
    k.phi2.resize(n);
    for (std::size_t i = 0; i < n; ++i) k.phi2[i] = c2[i].imag();

    // phi4: integrand -(4/3) W1 W2 W3 W4 cos(w(t4 - t1)) sin(w(t3 - t2)), t1 > t2 > t3 > t4,
    // expanded into four separable exponentials divided by 4i.
    const auto mmpp = nested_integral(g, {Minus, Minus, Plus, Plus}, grid);
    const auto mpmp = nested_integral(g, {Minus, Plus, Minus, Plus}, grid);
    const auto pmpm = nested_integral(g, {Plus, Minus, Plus, Minus}, grid);
    const auto ppmm = nested_integral(g, {Plus, Plus, Minus, Minus}, grid);
    std::vector<cplx> phi4(n);
    for (std::size_t i = 0; i < n; ++i) {
        phi4[i] = (-4.0 / 3.0) * (mmpp[i] - mpmp[i] + pmpm[i] - ppmm[i]) / (4.0 * kI);
    }
    k.phi4 = checked_real(phi4, "phi4");

    return k;
}

std::vector<cplx> theta_total(const KernelSeries& k, int order) {
    require_order(order);
    if (order == 2) return k.theta1;
    std::vector<cplx> out(k.theta1.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.theta1[i] + k.theta3[i];
    return out;
}

std::vector<double> phi_total(const KernelSeries& k, int order) {
    require_order(order);
    if (order == 2) return k.phi2;
    std::vector<double> out(k.phi2.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.phi2[i] + k.phi4[i];
    return out;
}

}  // namespace magnus2l
