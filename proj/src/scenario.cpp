#include "magnus2l/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "magnus2l/errors.hpp"

namespace magnus2l {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_plain(std::string_view text, std::string_view key) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw ConfigError("key '" + std::string(key) + "': cannot parse number '" + std::string(text) + "'");
    }
    return value;
}

double parse_number(std::string_view text, std::string_view key) {
    if (text.starts_with("pi")) {
        const auto rest = trim(text.substr(2));
        if (rest.empty()) return std::numbers::pi;
        if (rest.front() == '/') return std::numbers::pi / parse_plain(trim(rest.substr(1)), key);
        if (rest.front() == '*') return std::numbers::pi * parse_plain(trim(rest.substr(1)), key);
        throw ConfigError("key '" + std::string(key) + "': cannot parse '" + std::string(text) + "'");
    }
    return parse_plain(text, key);
}

std::size_t parse_count(std::string_view text, std::string_view key) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("key '" + std::string(key) + "': expected a non-negative integer, got '" +
                          std::string(text) + "'");
    }
    return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError("key '" + std::string(key) + "': expected true/false, got '" + std::string(text) + "'");
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Magnus2: return "magnus2";
        case Method::Magnus4: return "magnus4";
        case Method::Dyson4: return "dyson4";
        case Method::RK4: return "rk4";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    for (Method m : kAllMethods) {
        if (method_name(m) == name) return m;
    }
    throw ConfigError("unknown method '" + std::string(name) + "'");
}

std::vector<Method> parse_method_list(std::string_view list) {
    std::set<Method> chosen;
    while (!list.empty()) {
        const auto comma = list.find(',');
        const auto item = trim(list.substr(0, comma));
        if (!item.empty()) chosen.insert(parse_method(item));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    return {chosen.begin(), chosen.end()};
}

void Scenario::validate() const {
    if (omega0.has_value() == area.has_value()) throw ConfigError("give exactly one of omega0 / area");
    if (area && !(*area > 0.0)) throw ConfigError("area must be > 0");
    if (methods.empty()) throw ConfigError("methods must not be empty");
    if (!(omega >= 0.0)) throw ConfigError("omega must be >= 0");
    if (!(t_end > t0)) throw ConfigError("t_end must exceed t0");
    if (n_steps == 0 || n_steps % 2 != 0) throw ConfigError("n_steps must be a positive even integer");
    if (shape == ShapeKind::GaussianCosine) {
        if (nu.has_value() == delta.has_value()) throw ConfigError("give exactly one of nu / delta");
        if (!(a > 0.0)) throw ConfigError("gaussian-cosine pulse needs a > 0");
    } else {
        if (nu || delta) throw ConfigError("square pulse takes no nu / delta");
        if (!(t_off.value_or(t_end) > t_on.value_or(t0))) throw ConfigError("square pulse needs t_off > t_on");
    }
}

TimeGrid Scenario::grid() const { return {t0, t_end, n_steps}; }

double Scenario::carrier() const {
    if (nu) return *nu;
    if (delta) return omega - *delta;
    return 0.0;
}

PulseSpec Scenario::pulse() const {
    validate();
    const double amp = omega0.value_or(1.0);
    const PulseSpec base = shape == ShapeKind::GaussianCosine
                               ? PulseSpec::gaussian_cosine(amp, a, tau, carrier())
                               : PulseSpec::square(amp, t_on.value_or(t0), t_off.value_or(t_end));
    if (area) return scale_to_area(base, *area, grid());
    return base;
}

bool Scenario::runs(Method m) const { return std::find(methods.begin(), methods.end(), m) != methods.end(); }

Scenario parse_scenario(std::string_view text) {
    Scenario s;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (!seen.emplace(key).second) throw ConfigError("duplicate key '" + std::string(key) + "'");

        if (key == "shape") {
            if (value == "gaussian_cosine") s.shape = ShapeKind::GaussianCosine;
            else if (value == "square") s.shape = ShapeKind::Square;
            else throw ConfigError("unknown shape '" + std::string(value) + "'");
        } else if (key == "omega0") s.omega0 = parse_number(value, key);
        else if (key == "area") s.area = parse_number(value, key);
        else if (key == "a") s.a = parse_number(value, key);
        else if (key == "tau") s.tau = parse_number(value, key);
        else if (key == "nu") s.nu = parse_number(value, key);
        else if (key == "delta") s.delta = parse_number(value, key);
        else if (key == "t_on") s.t_on = parse_number(value, key);
        else if (key == "t_off") s.t_off = parse_number(value, key);
        else if (key == "omega") s.omega = parse_number(value, key);
        else if (key == "t0") s.t0 = parse_number(value, key);
        else if (key == "t_end") s.t_end = parse_number(value, key);
        else if (key == "n_steps") s.n_steps = parse_count(value, key);
        else if (key == "methods") s.methods = parse_method_list(value);
        else if (key == "r_c_preset") s.radius = ConvergenceRadius::parse(value);
        else if (key == "enforce_gate") s.enforce_gate = parse_bool(value, key);
        else throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
    s.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace magnus2l
