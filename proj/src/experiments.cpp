#include "polarwave/experiments.hpp"

#include <cmath>

#include "polarwave/core_model.hpp"
#include "polarwave/interactions.hpp"
#include "polarwave/meanfield.hpp"
#include "polarwave/scattering.hpp"

namespace polarwave {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

std::vector<double> grid_or(const RunConfig& cfg, double start, double stop) {
    return linear_grid(cfg.grid_start.value_or(start),
                       cfg.grid_stop.value_or(stop), cfg.grid_count);
}

/// Params with E_C(k) - E_A set to the given detuning at the sweep k.
SystemParams detuned(const RunConfig& cfg, double detuning) {
    SystemParams p = cfg.params;
    p.q0 = q0_for_detuning(detuning, cfg.k, p);
    return p;
}

SweepTable dispersion_table(const RunConfig& cfg) {
    SweepTable t;
    const bool vs_k = cfg.axis != SweepAxis::Detuning;
    t.header = {vs_k ? "k" : "detuning", "e_upper_rel", "e_lower_rel",
                "e_photon_rel", "e_atom_rel"};
    const SystemParams base = cfg.resolved_params();
    const std::vector<double> grid =
        vs_k ? grid_or(cfg, -3e-4, 3e-4) : grid_or(cfg, -1e-3, 1e-3);
    t.rows = parallel_map_rows(grid.size(), [&](std::size_t i) {
        const double x = grid[i];
        const SystemParams p = vs_k ? base : detuned(cfg, x);
        const double k = vs_k ? x : cfg.k;
        const BranchPair bp = hopfield(k, p);
        return std::vector<double>{x, bp.upper.energy - p.e_a,
                                   bp.lower.energy - p.e_a,
                                   photon_dispersion(k, p) - p.e_a, 0.0};
    });
    return t;
}

SweepTable fractions_table(const RunConfig& cfg) {
    SweepTable t;
    const bool vs_k = cfg.axis == SweepAxis::K;
    t.header = {vs_k ? "k" : "detuning", "x2_lower", "y2_lower", "x2_upper",
                "y2_upper"};
    const SystemParams base = cfg.resolved_params();
    const std::vector<double> grid =
        vs_k ? grid_or(cfg, -3e-4, 3e-4) : grid_or(cfg, -1e-3, 1e-3);
    t.rows = parallel_map_rows(grid.size(), [&](std::size_t i) {
        const double x = grid[i];
        const SystemParams p = vs_k ? base : detuned(cfg, x);
        const double k = vs_k ? x : cfg.k;
        const BranchPair bp = hopfield(k, p);
        return std::vector<double>{x, bp.lower.x2(), bp.lower.y2(),
                                   bp.upper.x2(), bp.upper.y2()};
    });
    return t;
}

SweepTable interaction_table(const RunConfig& cfg) {
    SweepTable t;
    t.header = {"detuning", "delta_x4", "hbar_v"};
    const std::vector<double> grid = grid_or(cfg, -1e-3, 0.0);
    t.rows = parallel_map_rows(grid.size(), [&](std::size_t i) {
        const SystemParams p = detuned(cfg, grid[i]);
        return std::vector<double>{
            grid[i], effective_potential(cfg.k, p, cfg.m_eff),
            mode_interaction_v(cfg.k, -cfg.k, p, cfg.m_eff)};
    });
    return t;
}

SweepTable defect_table(const RunConfig& cfg) {
    SweepTable t;
    t.header = {"detuning", "fsq", "tsq", "beta_abs"};
    const std::vector<double> grid = grid_or(cfg, -1e-3, 1e-3);
    t.rows = parallel_map_rows(grid.size(), [&](std::size_t i) {
        const SystemParams p = detuned(cfg, grid[i]);
        const ScatteringResult r =
            defect_amplitude(cfg.k, cfg.strength, p, cfg.m_eff);
        return std::vector<double>{grid[i], r.reflection_prob,
                                   r.transmission_prob, std::abs(r.beta)};
    });
    return t;
}

SweepTable impurity_table(const RunConfig& cfg) {
    SweepTable t;
    const bool vs_det = cfg.axis == SweepAxis::Detuning;
    t.header = {vs_det ? "detuning" : "ebar", "fsq", "tsq"};
    const std::vector<double> grid =
        vs_det ? grid_or(cfg, -1e-3, 1e-3) : grid_or(cfg, -2e-3, 2e-3);
    t.rows = parallel_map_rows(grid.size(), [&](std::size_t i) {
        const double x = grid[i];
        SystemParams p = vs_det ? detuned(cfg, x) : cfg.resolved_params();
        const double e_d = vs_det ? cfg.params.e_d.value_or(0.0) : p.e_a + x;
        const ScatteringResult r = impurity_amplitude(cfg.k, e_d, p, cfg.m_eff);
        return std::vector<double>{x, r.reflection_prob, r.transmission_prob};
    });
    return t;
}

SweepTable ls_oracle_table(const RunConfig& cfg) {
    SweepTable t;
    t.header = {"n_grid",       "k_used", "fsq_oracle", "fsq_closed",
                "rel_error",    "eta",    "fit_residual"};
    const SystemParams p = cfg.resolved_params();
    std::vector<int> sizes;
    for (int n = cfg.ls.n_grid, j = 0; j < 4; ++j, n *= 2) sizes.push_back(n);
    t.rows = parallel_map_rows(sizes.size(), [&](std::size_t i) {
        LatticeScatterSetup setup = cfg.ls;
        setup.n_grid = sizes[i];
        setup.potential_site_strength = cfg.strength;
        const LsSolution sol = ls_solve(cfg.k, setup, p, cfg.m_eff);
        const double fsq = std::norm(sol.f_extracted);
        return std::vector<double>{
            static_cast<double>(sizes[i]),
            sol.k_used,
            fsq,
            sol.closed_form_fsq,
            std::abs(fsq - sol.closed_form_fsq) /
                std::max(sol.closed_form_fsq, 1e-300),
            sol.eta_used,
            sol.fit_residual};
    });
    return t;
}

SweepTable pump_probe_table(const RunConfig& cfg) {
    SweepTable t;
    t.header = {"omega_rel", "n_probe", "n_probe_scaled", "n_ref",
                "n_ref_scaled"};
    const SystemParams p = cfg.resolved_params();
    const double v = mode_interaction_v(cfg.k, -cfg.k, p, cfg.m_eff);
    const double gamma2 = polariton_damping(cfg.k, Branch::Lower, p);
    const std::vector<double> grid = grid_or(cfg, -2e-2, 2e-2);
    const std::vector<ProbeSpectrumPoint> pts =
        probe_spectrum(grid, cfg.n_pump, cfg.probe_power, v, gamma2);
    for (const ProbeSpectrumPoint& pt : pts)
        t.rows.push_back({pt.omega_rel, pt.n_probe, pt.n_probe / cfg.probe_power,
                          pt.n_ref, pt.n_ref / cfg.probe_power});
    return t;
}

SweepTable symmetric_pump_table(const RunConfig& cfg) {
    SweepTable t;
    t.header = {"power", "power_scaled", "n"};
    const SystemParams p = cfg.resolved_params();
    const double v = mode_interaction_v(cfg.k, -cfg.k, p, cfg.m_eff);
    const double gamma = polariton_damping(cfg.k, Branch::Lower, p);
    const std::vector<double> grid = grid_or(cfg, 1e-4, 1.2e-1);
    t.rows = parallel_map_rows(grid.size(), [&](std::size_t i) {
        const std::vector<double> roots = symmetric_pump(grid[i], v, gamma);
        return std::vector<double>{grid[i], grid[i] / (gamma * gamma),
                                   roots.empty() ? nan_v : roots.front()};
    });
    return t;
}

SweepTable bistability_table(const RunConfig& cfg) {
    SweepTable t;
    t.header = {"power",   "power_scaled", "n_root1", "n_root2", "n_root3",
                "stable1", "stable2",      "stable3"};
    const SystemParams p = cfg.resolved_params();
    const double v = mode_interaction_v(cfg.k, -cfg.k, p, cfg.m_eff);
    const double gamma = polariton_damping(cfg.k, Branch::Lower, p);
    const std::vector<double> grid = grid_or(cfg, 1e-8, 2.4e-6);
    const std::vector<BistabilityBranch> branches =
        bistability_sweep(cfg.delta_bar, v, gamma, grid);
    for (const BistabilityBranch& b : branches) {
        std::vector<double> row{b.drive_power, b.drive_power / (gamma * gamma),
                                nan_v, nan_v, nan_v, nan_v, nan_v, nan_v};
        for (std::size_t j = 0; j < b.occupations.size() && j < 3; ++j) {
            row[2 + j] = b.occupations[j];
            row[5 + j] = b.stable_slope[j] ? 1.0 : 0.0;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepTable correlation_table(const RunConfig& cfg) {
    SweepTable t;
    t.header = {"z_m", "correlation"};
    const SystemParams p = cfg.resolved_params();
    const std::vector<double> grid = grid_or(cfg, 0.0, 2.0 * M_PI / cfg.k);
    t.rows = parallel_map_rows(grid.size(), [&](std::size_t i) {
        return std::vector<double>{
            grid[i],
            atom_correlation(cfg.z_fixed, grid[i], cfg.k, cfg.n_occupation, p)};
    });
    return t;
}

SweepTable channels_table(const RunConfig& cfg) {
    SweepTable t;
    t.header = {"index", "k1_out", "k2_out", "energy_residual"};
    const SystemParams p = cfg.resolved_params();
    const ChannelPair cp = two_body_channels(cfg.k1, cfg.k2, p, cfg.parabolic);
    int idx = 1;
    for (const Channel& c : cp.channels)
        t.rows.push_back({static_cast<double>(idx++), c.k1_out, c.k2_out,
                          c.energy_residual});
    return t;
}

} // namespace

SweepTable run_experiment(const RunConfig& cfg) {
    SweepTable t;
    try {
        switch (cfg.experiment) {
            case Experiment::Dispersion: t = dispersion_table(cfg); break;
            case Experiment::Fractions: t = fractions_table(cfg); break;
            case Experiment::InteractionStrength: t = interaction_table(cfg); break;
            case Experiment::DefectScattering: t = defect_table(cfg); break;
            case Experiment::ImpurityScattering: t = impurity_table(cfg); break;
            case Experiment::LsOracle: t = ls_oracle_table(cfg); break;
            case Experiment::PumpProbe: t = pump_probe_table(cfg); break;
            case Experiment::SymmetricPump: t = symmetric_pump_table(cfg); break;
            case Experiment::Bistability: t = bistability_table(cfg); break;
            case Experiment::Correlation: t = correlation_table(cfg); break;
            case Experiment::Channels: t = channels_table(cfg); break;
        }
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(experiment_name(cfg.experiment)) +
                                  ": " + e.detail());
    }
    t.validate();
    return t;
}

} // namespace polarwave
