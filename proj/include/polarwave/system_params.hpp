#ifndef POLARWAVE_SYSTEM_PARAMS_HPP
#define POLARWAVE_SYSTEM_PARAMS_HPP

#include <cmath>
#include <optional>

#include "polarwave/constants.hpp"
#include "polarwave/errors.hpp"

namespace polarwave {

/**
 * Physical inputs of the atom-waveguide model.  All energies in eV, lengths
 * in Angstrom, the dipole is the polarization-projected matrix element in
 * units of e*Angstrom.
 */
struct SystemParams {
    double e_a = 1.0;          // atomic transition energy
    double a = 5000.0;         // lattice constant
    int n_sites = 2001;        // N = 2M+1 lattice sites
    double epsilon = 4.0;      // effective dielectric constant
    double mu = 2.0;           // transition dipole (projected on polarization)
    double u_b = 0.25;         // guided-mode function at the lattice position
    double q0 = 0.0;           // confinement wave number; 0 selects resonant value
    double l_fiber = 1.0e7;    // quantization length for the photon modes
    double gamma_a = 2.15e-8;  // hbar * Gamma_A, excited-atom damping
    double gamma_c = 2.15e-10; // hbar * Gamma_C, fiber-photon damping
    std::optional<double> e_d; // impurity transition energy, if present

    /// Reference working point; q0 left at the exact k=0 resonance value.
    static SystemParams defaults() {
        SystemParams p;
        p.q0 = resonant_q0_value(p.e_a, p.epsilon);
        return p;
    }

    /// q0 such that the k=0 photon is degenerate with the atomic transition.
    static double resonant_q0_value(double e_a, double epsilon) {
        return e_a * std::sqrt(epsilon) / constants::hbar_c;
    }

    double brillouin_edge() const { return M_PI / a; }

    void validate() const {
        if (!(e_a > 0)) throw Error(ErrorKind::OutOfRange, "e_a must be > 0");
        if (!(a > 0)) throw Error(ErrorKind::OutOfRange, "a must be > 0");
        if (n_sites < 3 || n_sites % 2 == 0)
            throw Error(ErrorKind::OutOfRange, "n_sites must be odd and >= 3");
        if (!(epsilon > 0)) throw Error(ErrorKind::OutOfRange, "epsilon must be > 0");
        if (!(u_b >= 0)) throw Error(ErrorKind::OutOfRange, "u_b must be >= 0");
        if (!(q0 > 0)) throw Error(ErrorKind::OutOfRange, "q0 must be > 0");
        if (!(l_fiber > 0)) throw Error(ErrorKind::OutOfRange, "l_fiber must be > 0");
        if (!(gamma_a >= 0)) throw Error(ErrorKind::OutOfRange, "gamma_a must be >= 0");
        if (!(gamma_c >= 0)) throw Error(ErrorKind::OutOfRange, "gamma_c must be >= 0");
        if (e_d && !(*e_d >= 0)) throw Error(ErrorKind::OutOfRange, "e_d must be >= 0");
    }
};

} // namespace polarwave

#endif
