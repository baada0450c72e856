#ifndef POLARWAVE_CONFIG_HPP
#define POLARWAVE_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "polarwave/scattering.hpp"
#include "polarwave/system_params.hpp"

namespace polarwave {

enum class Experiment {
    Dispersion,
    Fractions,
    InteractionStrength,
    DefectScattering,
    ImpurityScattering,
    LsOracle,
    PumpProbe,
    SymmetricPump,
    Bistability,
    Correlation,
    Channels,
};

Experiment experiment_from_name(const std::string& name);
const char* experiment_name(Experiment e);

enum class SweepAxis { Default, K, Detuning, Ebar };

/**
 * Flat key = value run configuration.  Unlisted keys take the reference-default
 * values; see parse_config for the full key set.
 */
struct RunConfig {
    SystemParams params = SystemParams::defaults();
    bool rounded_q0 = false;   // params.rounded_q0: q0 = 1e-3 instead of resonant
    bool explicit_q0 = false;  // params.q0 given literally

    std::optional<double> grid_start;
    std::optional<double> grid_stop;
    int grid_count = 201;

    double k = 1e-6;            // run.k, fixed wave number of sweeps
    bool k_explicit = false;    // run.k given literally
    double k1 = 1e-6;           // run.k1 / run.k2, channel and drive momenta
    double k2 = -1e-6;
    double m_eff = 4.0;         // run.m_eff, mass energy for Delta and Lambda
    std::optional<double> detuning; // run.detuning: E_C(k)-E_A imposed at run.k
    double n_pump = 100.0;      // run.n_pump
    double probe_power = 1e-18; // run.probe_power, |F2|^2 in eV^2
    double strength = 1.0;      // run.strength, defect potential in eV
    double delta_bar = 1e-3;    // run.delta_bar, drive-polariton detuning
    double n_occupation = 100.0;// run.n_occupation, for correlation sweeps
    double z_fixed = 0.0;       // run.z_n, fixed atom position
    bool parabolic = true;      // run.parabolic, channel solver mode
    SweepAxis axis = SweepAxis::Default; // run.axis = k | detuning | ebar

    LatticeScatterSetup ls;     // ls.n_grid, ls.eta, ls.exact_weights,
                                // ls.include_upper, ls.fit_lo, ls.fit_hi

    std::string experiment_name_raw;
    Experiment experiment = Experiment::Dispersion;
    std::string output_path = "out.csv";

    /// Params with q0 resolved (resonant default, rounded flag, detuning).
    SystemParams resolved_params() const;
};

/**
 * Parses `key = value` lines; '#' starts a comment.  Unknown keys are
 * rejected.  Later assignments win; overrides behave like appended lines.
 */
RunConfig parse_config(const std::string& text);

RunConfig parse_config_file(const std::string& path,
                            const std::vector<std::string>& overrides);

void apply_override(RunConfig& cfg, const std::string& key_value);

} // namespace polarwave

#endif
