#ifndef POLARWAVE_INTERACTIONS_HPP
#define POLARWAVE_INTERACTIONS_HPP

#include "polarwave/polariton.hpp"

namespace polarwave {

struct DilutenessReport {
    double ratio = 0.0; // lambda_dB / a
    bool dilute = false;
};

/// Bundle of the kinematic interaction constants at a working mass.
struct InteractionParams {
    double u_onsite = 0.0;      // |U| = E_A
    double delta_lattice = 0.0; // 4 pi (hbar c)^2 / (m_eff a L)
    double m_eff = 0.0;         // mass energy used, eV
    double l_used = 0.0;        // quantization length used, Angstrom
};

InteractionParams interaction_params(const SystemParams& p, double m_eff);

/// On-site kinematic interaction magnitude |U| = E_A from the truncated
/// paulion-to-boson transformation.
double onsite_u(const SystemParams& p);

/// Lattice interaction constant Delta = 4 pi (hbar c)^2 / (m_eff c^2 a L).
double delta_strength(double m_eff, const SystemParams& p);

/// Lower-branch effective potential Delta * |X_k^-|^4.
double effective_potential(double k, const SystemParams& p, double m_eff);

/// Two-mode coupling hbar V = 2 Delta |X_k1^-|^2 |X_k2^-|^2, in eV.
double mode_interaction_v(double k1, double k2, const SystemParams& p,
                          double m_eff);

/// Thermal de Broglie wavelength sqrt(2 pi (hbar c)^2 / (m c^2 kB T)).
double thermal_de_broglie(double m_eff, double temperature_k);
double thermal_de_broglie_kt(double m_eff, double kt_ev);

/// Diluteness ratio lambda_dB / a; flagged dilute at one order of magnitude.
DilutenessReport diluteness(double lambda_db, const SystemParams& p);

/// Bogoliubov sound velocity as a fraction of c.
double sound_velocity(double n0_over_n, double u_bar, double m_pol);

/**
 * General four-leg interaction vertex
 * Delta X_k^{r*} X_k'^{s*} X_{k+kbar}^{u} X_{k'-kbar}^{v}.
 */
double interaction_vertex(double k, double kp, double kbar, Branch r, Branch s,
                          Branch u, Branch v, const SystemParams& p,
                          double m_eff);

} // namespace polarwave

#endif
