#include "bellhda/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "bellhda/csv.hpp"
#include "bellhda/errors.hpp"

namespace bellhda {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ConfigError("expected a real number, got '" + std::string(v) + "'");
    }
    return out;
}

template <class Int>
Int parse_int(std::string_view v) {
    Int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ConfigError("expected an integer, got '" + std::string(v) + "'");
    }
    return out;
}

template <class Enum>
Enum parse_enum(std::string_view v, std::initializer_list<std::pair<const char*, Enum>> names) {
    for (const auto& [name, value] : names) {
        if (v == name) return value;
    }
    throw ConfigError("unrecognized value '" + std::string(v) + "'");
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table{
        {"scenario",
         [](RunConfig& c, std::string_view v) {
             c.scenario = parse_enum<Scenario>(v, {{"static_blocks", Scenario::static_blocks},
                                                   {"random_telegraph", Scenario::random_telegraph},
                                                   {"quasi_periodic", Scenario::quasi_periodic}});
         }},
        {"gamma", [](RunConfig& c, std::string_view v) { c.gamma = parse_real(v); }},
        {"mu_tau", [](RunConfig& c, std::string_view v) { c.mu_tau = parse_real(v); }},
        {"duration_tau", [](RunConfig& c, std::string_view v) { c.duration_tau = parse_real(v); }},
        {"transient_tau", [](RunConfig& c, std::string_view v) { c.transient_tau = parse_real(v); }},
        {"rate_per_tau", [](RunConfig& c, std::string_view v) { c.rate_per_tau = parse_real(v); }},
        {"step_per_tau", [](RunConfig& c, std::string_view v) { c.step_per_tau = parse_int<int>(v); }},
        {"seed", [](RunConfig& c, std::string_view v) { c.seed = parse_int<std::uint64_t>(v); }},
        {"mode",
         [](RunConfig& c, std::string_view v) {
             c.mode = parse_enum<Mode>(v, {{"exact", Mode::exact}, {"sampled", Mode::sampled}});
         }},
        {"error_wrap",
         [](RunConfig& c, std::string_view v) {
             c.error_wrap = parse_enum<ErrorWrap>(
                 v, {{"half_pi", ErrorWrap::half_pi}, {"none", ErrorWrap::none}});
         }},
        {"a0", [](RunConfig& c, std::string_view v) { c.settings.a0 = parse_real(v); }},
        {"a1", [](RunConfig& c, std::string_view v) { c.settings.a1 = parse_real(v); }},
        {"b0", [](RunConfig& c, std::string_view v) { c.settings.b0 = parse_real(v); }},
        {"b1", [](RunConfig& c, std::string_view v) { c.settings.b1 = parse_real(v); }},
        {"alpha_history", [](RunConfig& c, std::string_view v) { c.alpha_history = parse_real(v); }},
        {"event_spacing",
         [](RunConfig& c, std::string_view v) {
             c.event_spacing = parse_enum<EventSpacing>(
                 v, {{"uniform", EventSpacing::uniform}, {"poisson", EventSpacing::poisson}});
         }},
        {"qp_period_tau", [](RunConfig& c, std::string_view v) { c.qp_period_tau = parse_real(v); }},
        {"qp_jitter", [](RunConfig& c, std::string_view v) { c.qp_jitter = parse_real(v); }},
        {"trace_decimation",
         [](RunConfig& c, std::string_view v) { c.trace_decimation = parse_int<int>(v); }},
    };
    return table;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
    RunConfig config;
    int line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        const std::string where = "config line " + std::to_string(line_no) + ": ";
        if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) throw ConfigError(where + "unknown key '" + std::string(key) + "'");
        if (value.empty()) throw ConfigError(where + "missing value for '" + std::string(key) + "'");
        try {
            it->second(config, value);
        } catch (const ConfigError& e) {
            throw ConfigError(where + std::string(key) + ": " + e.what());
        }
    }
    config.validate();
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void apply_env_overrides(RunConfig& config) {
    const char* raw = std::getenv("BELLHDA_SEED");
    if (raw == nullptr) return;
    const std::string_view v = trim(raw);
    try {
        config.seed = parse_int<std::uint64_t>(v);
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("BELLHDA_SEED: ") + e.what());
    }
}

std::string format_config(const RunConfig& c) {
    std::ostringstream os;
    os << "scenario = " << to_string(c.scenario) << '\n'
       << "gamma = " << format_real(c.gamma) << '\n'
       << "mu_tau = " << format_real(c.mu_tau) << '\n'
       << "duration_tau = " << format_real(c.duration_tau) << '\n'
       << "transient_tau = " << format_real(c.transient_tau) << '\n'
       << "rate_per_tau = " << format_real(c.rate_per_tau) << '\n'
       << "step_per_tau = " << c.step_per_tau << '\n'
       << "seed = " << c.seed << '\n'
       << "mode = " << to_string(c.mode) << '\n'
       << "error_wrap = " << to_string(c.error_wrap) << '\n'
       << "a0 = " << format_real(c.settings.a0) << '\n'
       << "a1 = " << format_real(c.settings.a1) << '\n'
       << "b0 = " << format_real(c.settings.b0) << '\n'
       << "b1 = " << format_real(c.settings.b1) << '\n'
       << "alpha_history = " << format_real(c.alpha_history) << '\n'
       << "event_spacing = " << to_string(c.event_spacing) << '\n'
       << "qp_period_tau = " << format_real(c.qp_period_tau) << '\n'
       << "qp_jitter = " << format_real(c.qp_jitter) << '\n'
       << "trace_decimation = " << c.trace_decimation << '\n';
    return os.str();
}

}  // namespace bellhda
