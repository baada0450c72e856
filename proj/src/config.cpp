#include "polarwave/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "polarwave/core_model.hpp"

namespace polarwave {

Experiment experiment_from_name(const std::string& name) {
    if (name == "dispersion") return Experiment::Dispersion;
    if (name == "fractions") return Experiment::Fractions;
    if (name == "interaction-strength") return Experiment::InteractionStrength;
    if (name == "defect-scattering") return Experiment::DefectScattering;
    if (name == "impurity-scattering") return Experiment::ImpurityScattering;
    if (name == "ls-oracle") return Experiment::LsOracle;
    if (name == "pump-probe") return Experiment::PumpProbe;
    if (name == "symmetric-pump") return Experiment::SymmetricPump;
    if (name == "bistability") return Experiment::Bistability;
    if (name == "correlation") return Experiment::Correlation;
    if (name == "channels") return Experiment::Channels;
    throw Error(ErrorKind::OutOfRange, "unrecognized experiment '" + name + "'");
}

const char* experiment_name(Experiment e) {
    switch (e) {
        case Experiment::Dispersion: return "dispersion";
        case Experiment::Fractions: return "fractions";
        case Experiment::InteractionStrength: return "interaction-strength";
        case Experiment::DefectScattering: return "defect-scattering";
        case Experiment::ImpurityScattering: return "impurity-scattering";
        case Experiment::LsOracle: return "ls-oracle";
        case Experiment::PumpProbe: return "pump-probe";
        case Experiment::SymmetricPump: return "symmetric-pump";
        case Experiment::Bistability: return "bistability";
        case Experiment::Correlation: return "correlation";
        case Experiment::Channels: return "channels";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ": '" + v + "' is not a number");
    }
    if (pos != v.size())
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ": trailing junk in '" + v + "'");
    return x;
}

int parse_int(const std::string& v, int line) {
    const double x = parse_double(v, line);
    if (x != std::floor(x) || std::abs(x) > 1e9)
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ": '" + v + "' is not an integer");
    return static_cast<int>(x);
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": '" + v + "' is not a boolean");
}

SweepAxis parse_axis(const std::string& v, int line) {
    if (v == "k") return SweepAxis::K;
    if (v == "detuning") return SweepAxis::Detuning;
    if (v == "ebar") return SweepAxis::Ebar;
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": axis must be k, detuning or ebar");
}

void assign(RunConfig& cfg, const std::string& key, const std::string& value,
            int line) {
    if (key == "params.e_a") cfg.params.e_a = parse_double(value, line);
    else if (key == "params.a") cfg.params.a = parse_double(value, line);
    else if (key == "params.n_sites") cfg.params.n_sites = parse_int(value, line);
    else if (key == "params.epsilon") cfg.params.epsilon = parse_double(value, line);
    else if (key == "params.mu") cfg.params.mu = parse_double(value, line);
    else if (key == "params.u_b") cfg.params.u_b = parse_double(value, line);
    else if (key == "params.q0") {
        cfg.params.q0 = parse_double(value, line);
        cfg.explicit_q0 = true;
    } else if (key == "params.rounded_q0") cfg.rounded_q0 = parse_bool(value, line);
    else if (key == "params.l_fiber") cfg.params.l_fiber = parse_double(value, line);
    else if (key == "params.gamma_a") cfg.params.gamma_a = parse_double(value, line);
    else if (key == "params.gamma_c") cfg.params.gamma_c = parse_double(value, line);
    else if (key == "params.e_d") cfg.params.e_d = parse_double(value, line);
    else if (key == "grid.start") cfg.grid_start = parse_double(value, line);
    else if (key == "grid.stop") cfg.grid_stop = parse_double(value, line);
    else if (key == "grid.count") cfg.grid_count = parse_int(value, line);
    else if (key == "run.k") {
        cfg.k = parse_double(value, line);
        cfg.k_explicit = true;
    }
    else if (key == "run.k1") cfg.k1 = parse_double(value, line);
    else if (key == "run.k2") cfg.k2 = parse_double(value, line);
    else if (key == "run.m_eff") cfg.m_eff = parse_double(value, line);
    else if (key == "run.detuning") cfg.detuning = parse_double(value, line);
    else if (key == "run.n_pump") cfg.n_pump = parse_double(value, line);
    else if (key == "run.probe_power") cfg.probe_power = parse_double(value, line);
    else if (key == "run.strength") cfg.strength = parse_double(value, line);
    else if (key == "run.delta_bar") cfg.delta_bar = parse_double(value, line);
    else if (key == "run.n_occupation") cfg.n_occupation = parse_double(value, line);
    else if (key == "run.z_n") cfg.z_fixed = parse_double(value, line);
    else if (key == "run.parabolic") cfg.parabolic = parse_bool(value, line);
    else if (key == "run.axis") cfg.axis = parse_axis(value, line);
    else if (key == "ls.n_grid") cfg.ls.n_grid = parse_int(value, line);
    else if (key == "ls.eta") cfg.ls.eta = parse_double(value, line);
    else if (key == "ls.exact_weights") cfg.ls.exact_weights = parse_bool(value, line);
    else if (key == "ls.include_upper") cfg.ls.lower_only = !parse_bool(value, line);
    else if (key == "ls.fit_lo") cfg.ls.fit_window_lo = parse_double(value, line);
    else if (key == "ls.fit_hi") cfg.ls.fit_window_hi = parse_double(value, line);
    else
        throw Error(ErrorKind::UnknownKey,
                    "line " + std::to_string(line) + ": unknown key '" + key + "'");
}

void parse_into(RunConfig& cfg, const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(line) + ": expected key = value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(line) + ": empty key or value");
        assign(cfg, key, value, line);
    }
}

void finalize(RunConfig& cfg) {
    if (cfg.grid_count < 2)
        throw Error(ErrorKind::OutOfRange, "grid.count must be >= 2");
    if (!cfg.explicit_q0)
        cfg.params.q0 = cfg.rounded_q0
                            ? 1e-3
                            : SystemParams::resonant_q0_value(cfg.params.e_a,
                                                              cfg.params.epsilon);
    cfg.params.validate();
}

} // namespace

SystemParams RunConfig::resolved_params() const {
    SystemParams p = params;
    if (detuning) p.q0 = q0_for_detuning(*detuning, k, p);
    p.validate();
    return p;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    parse_into(cfg, text);
    finalize(cfg);
    return cfg;
}

void apply_override(RunConfig& cfg, const std::string& key_value) {
    const auto eq = key_value.find('=');
    if (eq == std::string::npos)
        throw Error(ErrorKind::ParseError, "--set expects key=value");
    assign(cfg, trim(key_value.substr(0, eq)), trim(key_value.substr(eq + 1)), 0);
}

RunConfig parse_config_file(const std::string& path,
                            const std::vector<std::string>& overrides) {
    RunConfig cfg;
    if (!path.empty()) {
        std::ifstream is(path);
        if (!is) throw Error(ErrorKind::IoError, "cannot read config " + path);
        std::ostringstream buf;
        buf << is.rdbuf();
        parse_into(cfg, buf.str());
    }
    for (const std::string& ov : overrides) apply_override(cfg, ov);
    finalize(cfg);
    return cfg;
}

} // namespace polarwave
