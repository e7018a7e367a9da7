#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "magnus2l/errors.hpp"
#include "magnus2l/experiments.hpp"
#include "magnus2l/output.hpp"

using namespace magnus2l;

namespace {

Scenario strong_scenario(double area, double delta) {
    Scenario s;
    s.area = area;
    s.a = 0.01;
    s.tau = 30.0;
    s.delta = delta;
    s.t_end = 60.0;
    s.n_steps = 3000;
    return s;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("magnus2l_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST(run_scenario, every_requested_method_has_a_full_series) {
    const auto r = run_scenario(strong_scenario(std::numbers::pi / 2, 0.0));
    ASSERT_EQ(r.series.size(), 4u);
    for (const auto& [m, series] : r.series) {
        EXPECT_EQ(series.population.size(), 3001u) << method_name(m);
        EXPECT_EQ(series.norm.size(), 3001u);
    }
    EXPECT_EQ(r.errors.size(), 3u);
    EXPECT_LT(r.errors.at(Method::Magnus4).max, r.errors.at(Method::Magnus2).max);
    EXPECT_LE(r.errors.at(Method::Magnus4).rms, r.errors.at(Method::Magnus4).max);
    EXPECT_NEAR(r.area, std::numbers::pi / 2, 1e-12);
}

TEST(run_scenario, only_requested_methods_run) {
    auto s = strong_scenario(0.3, 0.1);
    s.methods = {Method::Magnus4};
    const auto r = run_scenario(s);
    EXPECT_EQ(r.series.size(), 1u);
    EXPECT_TRUE(r.series.contains(Method::Magnus4));
    EXPECT_TRUE(r.errors.empty());
}

TEST(run_scenario, zero_amplitude_rk4_only) {
    auto s = strong_scenario(1.0, 0.0);
    s.area.reset();
    s.omega0 = 0.0;
    s.methods = {Method::RK4};
    const auto r = run_scenario(s);
    for (double p : r.series.at(Method::RK4).population) EXPECT_EQ(p, 0.0);
    EXPECT_TRUE(r.errors.empty());
    EXPECT_EQ(r.area, 0.0);
    EXPECT_EQ(summary_json(r)["area"], 0.0);
}

TEST(run_scenario, gate_reporting_and_enforcement) {
    auto s = strong_scenario(std::numbers::pi / std::numbers::sqrt2 * 1.001, 0.0);
    s.methods = {Method::Magnus4};
    const auto r = run_scenario(s);
    EXPECT_FALSE(r.convergence.satisfied);
    EXPECT_EQ(summary_json(r)["convergence"]["satisfied"], false);
    EXPECT_EQ(r.series.at(Method::Magnus4).population.size(), 3001u);

    // Same verdict as the convergence module on its own.
    const auto direct = convergence_gate(s.pulse(), s.grid(), s.radius);
    EXPECT_EQ(direct.satisfied, r.convergence.satisfied);
    EXPECT_EQ(direct.margin, r.convergence.margin);

    s.enforce_gate = true;
    try {
        run_scenario(s);
        FAIL() << "expected GateError";
    } catch (const GateError& e) {
        EXPECT_NE(std::string(e.what()).find("moan-niesen"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("margin"), std::string::npos);
    }
}

TEST(run_scenario, resolution_errors_propagate) {
    auto s = strong_scenario(0.5, 0.0);
    s.n_steps = 100;
    EXPECT_THROW(run_scenario(s), ResolutionError);
}

TEST(emit_csv, header_and_rows) {
    const auto r = run_scenario(strong_scenario(0.5, 0.2));
    const std::string csv = format_csv(r);
    std::stringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, kCsvHeader);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        EXPECT_EQ(split(line).size(), 9u);
        ++rows;
    }
    EXPECT_EQ(rows, 3001u);
    EXPECT_EQ(csv.back(), '\n');
}

TEST(emit_csv, absent_methods_leave_fields_empty) {
    SimulationResult r;
    r.times = {0.0, 0.5};
    std::string csv = format_csv(r);
    EXPECT_EQ(csv, std::string(kCsvHeader) + "\n0.0000000000000000e+00,,,,,,,,\n5.0000000000000000e-01,,,,,,,,\n");
}

TEST(emit_csv, round_trips_bit_exact) {
    const auto r = run_scenario(strong_scenario(std::numbers::pi / 2, 0.1));
    const auto path = temp_path("roundtrip.csv");
    emit_csv(r, path);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    for (std::size_t k = 0; std::getline(in, line); ++k) {
        const auto f = split(line);
        EXPECT_EQ(std::stod(f[0]), r.times[k]);
        std::size_t col = 1;
        for (bool pop : {true, false}) {
            for (Method m : kAllMethods) {
                const auto& s = r.series.at(m);
                EXPECT_EQ(std::stod(f[col++]), pop ? s.population[k] : s.norm[k]);
            }
        }
    }
    std::filesystem::remove(path);
}

TEST(emit_csv, unwritable_path) {
    SimulationResult r;
    r.times = {0.0};
    EXPECT_THROW(emit_csv(r, "/nonexistent-dir/out.csv"), IoError);
    EXPECT_THROW(emit_summary(r, "/nonexistent-dir/out.json"), IoError);
}

TEST(emit_summary, keys_in_order) {
    const auto r = run_scenario(strong_scenario(0.5, 0.0));
    const auto j = summary_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"scenario", "area", "convergence", "errors", "wall_time_ms"}));
    std::vector<std::string> conv;
    for (const auto& [k, v] : j["convergence"].items()) conv.push_back(k);
    EXPECT_EQ(conv, (std::vector<std::string>{"integral_value", "area", "r_c", "preset", "satisfied", "margin"}));
    EXPECT_EQ(j["errors"]["magnus4"]["max"], r.errors.at(Method::Magnus4).max);
    EXPECT_TRUE(j["wall_time_ms"]["rk4"].is_null());
    EXPECT_TRUE(summary_json(r, true)["wall_time_ms"]["rk4"].is_number());
    EXPECT_EQ(j["convergence"]["preset"], "moan-niesen");
}

TEST(emit_summary, deterministic_outputs) {
    const auto s = strong_scenario(std::numbers::pi / 2, 0.2);
    const auto a = temp_path("a.json"), b = temp_path("b.json");
    emit_summary(run_scenario(s), a);
    emit_summary(run_scenario(s), b);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(format_csv(run_scenario(s)), format_csv(run_scenario(s)));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(order_scaling_study, argument_checks) {
    const auto s = strong_scenario(0.3, 0.2);
    const std::vector<double> two{1.0, 0.5};
    const std::vector<double> zero{1.0, 0.0, 0.5};
    const std::vector<double> negative{1.0, -0.5, 0.25};
    EXPECT_THROW(order_scaling_study(s, two), ArgumentError);
    EXPECT_THROW(order_scaling_study(s, zero), ArgumentError);
    EXPECT_THROW(order_scaling_study(s, negative), ArgumentError);
}

TEST(order_scaling_study, identical_scales_identical_rows) {
    const std::vector<double> scales{1.0, 1.0, 1.0};
    const auto study = order_scaling_study(strong_scenario(0.3, 0.2), scales);
    ASSERT_EQ(study.rows.size(), 3u);
    EXPECT_EQ(study.rows[0].error_m2, study.rows[1].error_m2);
    EXPECT_EQ(study.rows[0].error_m4, study.rows[2].error_m4);
    EXPECT_TRUE(std::isnan(study.slope_m2));
}

TEST(order_scaling_study, errors_vanish_with_amplitude) {
    const std::vector<double> scales{1.0, 0.3, 0.1, 0.03};
    const auto study = order_scaling_study(strong_scenario(0.5, 0.2), scales);
    for (std::size_t i = 1; i < study.rows.size(); ++i) {
        EXPECT_LT(study.rows[i].error_m2, study.rows[i - 1].error_m2);
        EXPECT_LT(study.rows[i].error_m4, study.rows[i - 1].error_m4);
    }
    const auto j = scaling_json(strong_scenario(0.5, 0.2), study);
    EXPECT_EQ(j["rows"].size(), 4u);
}

TEST(log_log_slope, exact_power_law) {
    const std::vector<double> x{1.0, 0.5, 0.25, 0.125};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, 4.5));
    EXPECT_NEAR(log_log_slope(x, y), 4.5, 1e-12);
}
