#include "polarwave/interactions.hpp"

#include <cmath>

namespace polarwave {

using constants::hbar_c;
using constants::boltzmann;

InteractionParams interaction_params(const SystemParams& p, double m_eff) {
    InteractionParams ip;
    ip.u_onsite = onsite_u(p);
    ip.delta_lattice = delta_strength(m_eff, p);
    ip.m_eff = m_eff;
    ip.l_used = p.l_fiber;
    return ip;
}

double onsite_u(const SystemParams& p) {
    // U = -E_A is attractive; every scattering and mean-field formula here
    // consumes U^2 or |U|, so the magnitude is stored.
    return p.e_a;
}

double delta_strength(double m_eff, const SystemParams& p) {
    if (!(m_eff > 0)) throw Error(ErrorKind::OutOfRange, "m_eff must be > 0");
    return 4.0 * M_PI * hbar_c * hbar_c / (m_eff * p.a * p.l_fiber);
}

double effective_potential(double k, const SystemParams& p, double m_eff) {
    const double x2 = hopfield_branch(k, p, Branch::Lower).x2();
    return delta_strength(m_eff, p) * x2 * x2;
}

double mode_interaction_v(double k1, double k2, const SystemParams& p,
                          double m_eff) {
    const double x2_1 = hopfield_branch(k1, p, Branch::Lower).x2();
    const double x2_2 = hopfield_branch(k2, p, Branch::Lower).x2();
    return 2.0 * delta_strength(m_eff, p) * x2_1 * x2_2;
}

double thermal_de_broglie_kt(double m_eff, double kt_ev) {
    if (!(m_eff > 0) || !(kt_ev > 0))
        throw Error(ErrorKind::OutOfRange, "mass and temperature must be > 0");
    return std::sqrt(2.0 * M_PI * hbar_c * hbar_c / (m_eff * kt_ev));
}

double thermal_de_broglie(double m_eff, double temperature_k) {
    return thermal_de_broglie_kt(m_eff, boltzmann * temperature_k);
}

DilutenessReport diluteness(double lambda_db, const SystemParams& p) {
    DilutenessReport r;
    r.ratio = lambda_db / p.a;
    r.dilute = r.ratio >= 10.0;
    return r;
}

double sound_velocity(double n0_over_n, double u_bar, double m_pol) {
    if (n0_over_n < 0.0 || n0_over_n > 1.0)
        throw Error(ErrorKind::OutOfRange, "condensate fraction must be in [0, 1]");
    if (u_bar < 0.0) throw Error(ErrorKind::OutOfRange, "u_bar must be >= 0");
    return std::sqrt(n0_over_n * 2.0 * u_bar / m_pol);
}

double interaction_vertex(double k, double kp, double kbar, Branch r, Branch s,
                          Branch u, Branch v, const SystemParams& p,
                          double m_eff) {
    const double x_r = hopfield_branch(k, p, r).x.real();
    const double x_s = hopfield_branch(kp, p, s).x.real();
    const double x_u = hopfield_branch(k + kbar, p, u).x.real();
    const double x_v = hopfield_branch(kp - kbar, p, v).x.real();
    return delta_strength(m_eff, p) * x_r * x_s * x_u * x_v;
}

} // namespace polarwave
