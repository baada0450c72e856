#ifndef POLARWAVE_CORE_MODEL_HPP
#define POLARWAVE_CORE_MODEL_HPP

#include <complex>

#include "polarwave/system_params.hpp"

namespace polarwave {

/// Guided-photon dispersion E_C(q) = (hbar c / sqrt(eps)) sqrt(q0^2 + q^2).
double photon_dispersion(double q, const SystemParams& p);

/// q0 that puts the k=0 photon in resonance with the atomic transition.
double resonant_q0(const SystemParams& p);

/// q0 that realizes a requested photon-atom detuning E_C(k) - E_A at fixed k.
double q0_for_detuning(double detuning, double k, const SystemParams& p);

/**
 * Excitation-photon coupling g_k.  The mode volume is V = S N a with
 * S = pi a^2, so N drops out of |g_k|^2 = E_C(k) u(b)^2 mu^2 * 2 k_C / a^3.
 * The phase convention keeps the -i front factor; all downstream formulas
 * consume the magnitude only.
 */
std::complex<double> coupling_g(double k, const SystemParams& p);

double coupling_g_abs(double k, const SystemParams& p);

/// delta_k = (E_C(k) - E_A) / 2
double detuning_delta(double k, const SystemParams& p);

/// D_k = sqrt(delta_k^2 + |g_k|^2)
double rabi_d(double k, const SystemParams& p);

/// Confined-photon effective mass energy m_C c^2 = hbar c q0 sqrt(eps).
double photon_mass_energy(const SystemParams& p);

} // namespace polarwave

#endif
