#include "magnus2l/output.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "magnus2l/errors.hpp"

namespace magnus2l {

namespace {

void append_number(std::string& out, double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 16);
    out.append(buf.data(), res.ptr);
}

}  // namespace

std::string format_csv(const SimulationResult& r) {
    std::string out = kCsvHeader;
    out += '\n';
    for (std::size_t k = 0; k < r.times.size(); ++k) {
        append_number(out, r.times[k]);
        for (bool population : {true, false}) {
            for (Method m : kAllMethods) {
                out += ',';
                if (auto it = r.series.find(m); it != r.series.end()) {
                    append_number(out, population ? it->second.population[k] : it->second.norm[k]);
                }
            }
        }
        out += '\n';
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

void emit_csv(const SimulationResult& r, const std::filesystem::path& path) { write_file(path, format_csv(r)); }

ordered_json scenario_json(const Scenario& s, double resolved_omega0) {
    ordered_json j;
    j["shape"] = s.shape == ShapeKind::GaussianCosine ? "gaussian_cosine" : "square";
    if (s.omega0) j["omega0"] = *s.omega0;
    if (s.area) j["area"] = *s.area;
    if (s.shape == ShapeKind::GaussianCosine) {
        j["a"] = s.a;
        j["tau"] = s.tau;
        if (s.nu) j["nu"] = *s.nu;
        if (s.delta) j["delta"] = *s.delta;
    } else {
        j["t_on"] = s.t_on.value_or(s.t0);
        j["t_off"] = s.t_off.value_or(s.t_end);
    }
    j["omega"] = s.omega;
    j["t0"] = s.t0;
    j["t_end"] = s.t_end;
    j["n_steps"] = s.n_steps;
    auto methods = ordered_json::array();
    for (Method m : s.methods) methods.push_back(method_name(m));
    j["methods"] = std::move(methods);
    j["r_c_preset"] = s.radius.name();
    j["enforce_gate"] = s.enforce_gate;
    j["resolved_omega0"] = resolved_omega0;
    return j;
}

ordered_json report_json(const ConvergenceReport& report) {
    ordered_json j;
    j["integral_value"] = report.integral_value;
    j["area"] = report.area;
    j["r_c"] = report.r_c;
    j["preset"] = preset_name(report.preset);
    j["satisfied"] = report.satisfied;
    j["margin"] = report.margin;
    return j;
}

ordered_json summary_json(const SimulationResult& r, bool include_timing) {
    ordered_json j;
    j["scenario"] = scenario_json(r.scenario, r.omega0);
    j["area"] = r.area;
    j["convergence"] = report_json(r.convergence);
    auto errors = ordered_json::object();
    for (const auto& [method, e] : r.errors) errors[method_name(method)] = {{"max", e.max}, {"rms", e.rms}};
    j["errors"] = std::move(errors);
    auto timing = ordered_json::object();
    for (const auto& [method, series] : r.series) {
        timing[method_name(method)] = include_timing ? ordered_json(series.wall_time_ms) : ordered_json(nullptr);
    }
    j["wall_time_ms"] = std::move(timing);
    return j;
}

void emit_summary(const SimulationResult& r, const std::filesystem::path& path, bool include_timing) {
    write_file(path, summary_json(r, include_timing).dump(2) + "\n");
}

ordered_json scaling_json(const Scenario& s, const ScalingStudy& study) {
    ordered_json j;
    j["scenario"] = scenario_json(s, s.pulse().amplitude());
    auto rows = ordered_json::array();
    for (const auto& row : study.rows) {
        rows.push_back({{"scale", row.scale}, {"error_m2", row.error_m2}, {"error_m4", row.error_m4}});
    }
    j["rows"] = std::move(rows);
    j["slope_m2"] = study.slope_m2;
    j["slope_m4"] = study.slope_m4;
    return j;
}

}  // namespace magnus2l
