#include "polarwave/core_model.hpp"

#include <cmath>

namespace polarwave {

using constants::hbar_c;
using constants::coulomb_k;

double photon_dispersion(double q, const SystemParams& p) {
    return hbar_c / std::sqrt(p.epsilon) * std::hypot(p.q0, q);
}

double resonant_q0(const SystemParams& p) {
    return p.e_a * std::sqrt(p.epsilon) / hbar_c;
}

double q0_for_detuning(double detuning, double k, const SystemParams& p) {
    const double e_target = p.e_a + detuning;
    const double s = e_target * std::sqrt(p.epsilon) / hbar_c;
    const double q0sq = s * s - k * k;
    if (!(e_target > 0) || !(q0sq > 0))
        throw Error(ErrorKind::OutOfRange,
                    "requested detuning is below the free-photon line at this k");
    return std::sqrt(q0sq);
}

double coupling_g_abs(double k, const SystemParams& p) {
    const double ec = photon_dispersion(k, p);
    const double g2 = ec * p.u_b * p.u_b * p.mu * p.mu * 2.0 * coulomb_k / (p.a * p.a * p.a);
    return std::sqrt(g2);
}

std::complex<double> coupling_g(double k, const SystemParams& p) {
    return {0.0, -coupling_g_abs(k, p)};
}

double detuning_delta(double k, const SystemParams& p) {
    return 0.5 * (photon_dispersion(k, p) - p.e_a);
}

double rabi_d(double k, const SystemParams& p) {
    return std::hypot(detuning_delta(k, p), coupling_g_abs(k, p));
}

double photon_mass_energy(const SystemParams& p) {
    return hbar_c * p.q0 * std::sqrt(p.epsilon);
}

} // namespace polarwave
