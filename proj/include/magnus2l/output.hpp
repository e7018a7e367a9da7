#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "magnus2l/experiments.hpp"

namespace magnus2l {

using ordered_json = nlohmann::ordered_json;

/// CSV columns: t, pop_<method> x4, norm_<method> x4. Methods that did not
/// run leave their fields empty. Values use 17 significant digits.
inline constexpr const char* kCsvHeader =
    "t,pop_magnus2,pop_magnus4,pop_dyson4,pop_rk4,norm_magnus2,norm_magnus4,norm_dyson4,norm_rk4";

std::string format_csv(const SimulationResult& r);
void emit_csv(const SimulationResult& r, const std::filesystem::path& path);

ordered_json scenario_json(const Scenario& s, double resolved_omega0);
ordered_json report_json(const ConvergenceReport& report);

/// Keys in order: scenario, area, convergence, errors, wall_time_ms.
/// wall_time_ms entries are null unless `include_timing`, so that repeated
/// runs stay byte-identical.
ordered_json summary_json(const SimulationResult& r, bool include_timing = false);
void emit_summary(const SimulationResult& r, const std::filesystem::path& path, bool include_timing = false);

ordered_json scaling_json(const Scenario& s, const ScalingStudy& study);

/// Writes `content` to `path`, throwing IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace magnus2l
