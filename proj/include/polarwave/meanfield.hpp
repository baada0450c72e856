#ifndef POLARWAVE_MEANFIELD_HPP
#define POLARWAVE_MEANFIELD_HPP

#include <complex>
#include <optional>
#include <vector>

#include "polarwave/numerics.hpp"
#include "polarwave/polariton.hpp"

namespace polarwave {

/**
 * Two driven polariton modes in their rotating frames.  Drive amplitudes f1,
 * f2 are hbar F-tilde in eV.  When the external classical fields are given
 * instead, f = gamma_mirror * conj(Y_k) * F_script.
 */
struct DriveSpec {
    double k1 = 0.0, k2 = 0.0;
    double omega1 = 0.0, omega2 = 0.0; // drive frequencies x hbar, eV
    std::complex<double> f1, f2;
    double gamma_mirror = 0.0;
    std::optional<std::complex<double>> script_f1, script_f2;
};

/// f = gamma * Y_k^* * F_script for a mirror-coupled external field.
std::complex<double> drive_from_external(double gamma_mirror,
                                         const std::complex<double>& y_k,
                                         const std::complex<double>& script_f);

/// Fills f1/f2 from the script fields when those are present.
DriveSpec resolve_drive(DriveSpec d, const SystemParams& p);

struct TwoModeState {
    std::complex<double> a1, a2; // rotating-frame amplitudes
    double n1 = 0.0, n2 = 0.0;   // occupations |a|^2

    static TwoModeState from_amplitudes(std::complex<double> a1,
                                        std::complex<double> a2) {
        return {a1, a2, std::norm(a1), std::norm(a2)};
    }
};

/// Mode frequencies and dampings entering the rotating-frame EOM (all eV).
struct ModeFreqs {
    double omega_pol1 = 0.0, omega_pol2 = 0.0; // polariton energies Omega_k
    double gamma1 = 0.0, gamma2 = 0.0;         // hbar Gamma of each mode
};

/// Damping mix hbar Gamma = (Gamma_A/2)|X|^2 + (Gamma_C/2)|Y|^2.
double polariton_damping(double k, Branch branch, const SystemParams& p);

/**
 * Rotating-frame mean-field equations
 *   i da1/dt = (Omega1 - omega1 - i Gamma1) a1 + V |a2|^2 a1 + F1
 * and symmetrically for mode 2 (time in hbar/eV).
 */
void eom_rhs(const TwoModeState& state, const DriveSpec& drive, double v,
             const ModeFreqs& freqs, std::complex<double>& da1,
             std::complex<double>& da2);

/**
 * Coupled steady state: damped fixed point on the occupation pair from
 * (0, 0), falling back to time integration of the EOM when the iteration
 * does not settle.  Unique-root regimes only.
 */
TwoModeState steady_state_coupled(const DriveSpec& drive, double v,
                                  const ModeFreqs& freqs);

/// Long-time rk4 relaxation of the EOM from vacuum; test cross-check.
TwoModeState relax_to_steady_state(const DriveSpec& drive, double v,
                                   const ModeFreqs& freqs,
                                   double gamma_multiples = 60.0);

struct ProbeSpectrumPoint {
    double omega_rel = 0.0; // omega - Omega_k2
    double n_probe = 0.0;   // with the pump on
    double n_ref = 0.0;     // pump off
};

/**
 * Weak-probe occupation under a fixed pump population:
 * N2(omega) = |F2|^2 / ((omega - Omega2 - V N_pump)^2 + Gamma2^2).
 */
std::vector<ProbeSpectrumPoint> probe_spectrum(
    const std::vector<double>& omega_rel_grid, double n_pump,
    double probe_power, double v, double gamma2);

/**
 * Symmetric resonant counter-propagating pump: real non-negative roots of
 * N (Gamma^2 + V^2 N^2) = |F|^2.  The V = 0 reduction is linear and handled
 * directly.
 */
std::vector<double> symmetric_pump(double drive_power, double v, double gamma);

struct BistabilityBranch {
    double drive_power = 0.0;          // |F|^2, eV^2
    std::vector<double> occupations;   // ascending, 1 or 3 roots
    std::vector<bool> stable_slope;    // d|F|^2/dN > 0
    std::vector<bool> stable_linear;   // EOM linearization, Re(lambda) <= 0
};

/**
 * Detuned symmetric pump N [(delta_bar - V N)^2 + Gamma^2] = |F|^2 over a
 * power grid.  Three positive roots appear exactly for powers between the
 * turning points when delta_bar^2 > 3 Gamma^2.
 */
std::vector<BistabilityBranch> bistability_sweep(
    double delta_bar, double v, double gamma,
    const std::vector<double>& power_grid);

/// Turning-point occupations [2 delta_bar -+ sqrt(delta_bar^2-3 Gamma^2)]/(3V).
std::pair<double, double> bistability_turning_points(double delta_bar, double v,
                                                     double gamma);

/// Steady-state atom-atom correlation (4 |X|^2 N / N_sites) cos(k z_n) cos(k z_m).
double atom_correlation(double z_n, double z_m, double k, double n_occupation,
                        const SystemParams& p);

} // namespace polarwave

#endif
