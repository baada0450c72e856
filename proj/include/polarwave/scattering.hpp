#ifndef POLARWAVE_SCATTERING_HPP
#define POLARWAVE_SCATTERING_HPP

#include <array>
#include <complex>
#include <vector>

#include "polarwave/polariton.hpp"

namespace polarwave {

enum class ScatteringRegime { HardCore, Weak, Intermediate };

/**
 * Reflection amplitude f off a single-site potential, with the derived
 * transmission 1 + f.  reflection_prob + transmission_prob = 1 by the
 * structure of f = i beta / (1 - i beta).
 */
struct ScatteringResult {
    std::complex<double> f;
    double reflection_prob = 0.0;
    std::complex<double> transmission_amp;
    double transmission_prob = 0.0;
    double lambda_energy = 0.0; // Lambda of the closed form, eV
    double beta = 0.0;          // (strength/Lambda)(pi^2/2ka)|X_k^-|^2
    ScatteringRegime regime = ScatteringRegime::Intermediate;
};

/// Lambda = (hbar c)^2 pi^2 / (2 a^2 m_pol c^2).
double lambda_energy(double m_pol, const SystemParams& p);

/**
 * Closed-form reflection off a vacancy-like single-site potential of the
 * given strength (eV).  With zero_k_limit set, k <= 0 returns the hard-core
 * k->0 limit f = -1 instead of failing.
 */
ScatteringResult defect_amplitude(double k, double strength,
                                  const SystemParams& p, double m_pol,
                                  bool zero_k_limit = false);

/// Same closed form with strength = E_d - E_A for an impurity atom.
ScatteringResult impurity_amplitude(double k, double e_d,
                                    const SystemParams& p, double m_pol,
                                    bool zero_k_limit = false);

/// Hard-core limit: polariton reflection |X_k^-|^2 and transmission |Y_k^-|^2.
std::pair<double, double> hardcore_reflection_transmission(double k,
                                                           const SystemParams& p);

struct Channel {
    double k1_out = 0.0;
    double k2_out = 0.0;
    double energy_residual = 0.0; // |E_in - E_out|
};

struct ChannelPair {
    double k1_in = 0.0;
    double k2_in = 0.0;
    std::vector<Channel> channels;
};

/**
 * Outgoing two-polariton channels conserving energy and total momentum.
 * Parabolic mode returns the forward/backward pair exactly; otherwise the
 * exact lower-branch dispersion is solved by scan plus bisection over the
 * exchange momentum, keeping both outgoing momenta inside the zone.
 */
ChannelPair two_body_channels(double k1, double k2, const SystemParams& p,
                              bool parabolic = true);

struct ScatteringMatrix {
    std::array<std::array<std::complex<double>, 2>, 2> m;
    /// Frobenius norm of M^dagger M - 1; diagnostic only.
    double unitarity_defect() const;
};

ScatteringMatrix scattering_matrix(double k1, double k2, const SystemParams& p,
                                   Branch r = Branch::Lower,
                                   Branch s = Branch::Lower);

struct EntangledState {
    std::complex<double> amp_forward;  // Y_k1 Y_k2
    std::complex<double> amp_backward; // X_k1 X_k2
    double norm = 0.0;                 // |YY|^2 + |XX|^2, reported as-is
};

EntangledState entangled_state(double k1, double k2, const SystemParams& p);

/**
 * Discrete Lippmann-Schwinger setup: n_grid momentum points spanning the
 * Brillouin zone (one k' per ring site), +i eta regulator, and the
 * single-site potential at the origin.  eta = 0 selects five times the mean
 * on-shell level spacing.  exact_weights swaps the on-shell excitation
 * weight |X_k|^2 for the k'-resolved |X_k'|^2 (sensitivity study; the
 * closed form drops the principal-value background this turns on).
 */
struct LatticeScatterSetup {
    int n_grid = 4096;
    double eta = 0.0;
    double potential_site_strength = 1.0;
    bool lower_only = true;
    bool exact_weights = false;
    double fit_window_lo = 0.25; // fractions of the ring, incoming side
    double fit_window_hi = 0.50;
};

struct LsSolution {
    std::vector<std::complex<double>> psi; // site amplitudes, n = -N/2 .. N/2-1
    std::complex<double> f_extracted;
    double k_used = 0.0;     // incident k snapped to the grid
    double eta_used = 0.0;
    double fit_residual = 0.0;
    double closed_form_fsq = 0.0; // |f|^2 of the matching closed form
};

/**
 * Numerical oracle for the closed-form amplitude: solves the discrete
 * scattering equation on the momentum grid, builds the site wave function,
 * and extracts f by least squares against the incident-plus-reflected wave
 * in the asymptotic window (the known +i eta attenuation of the scattered
 * wave is divided out of the fit basis).
 */
LsSolution ls_solve(double k, const LatticeScatterSetup& setup,
                    const SystemParams& p, double m_pol);

/// Potential strength realizing a target beta at (k, m_pol); test helper.
double strength_for_beta(double beta, double k, const SystemParams& p,
                         double m_pol);

} // namespace polarwave

#endif
