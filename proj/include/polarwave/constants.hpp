#ifndef POLARWAVE_CONSTANTS_HPP
#define POLARWAVE_CONSTANTS_HPP

namespace polarwave::constants {

// Unit system: energies in eV, lengths in Angstrom, dipoles in e*Angstrom,
// time in hbar/eV.

inline constexpr double hbar_c = 1973.269804;     // eV * A
inline constexpr double coulomb_k = 14.399645;    // eV * A  (e^2 / 4 pi eps0)
inline constexpr double boltzmann = 8.617333e-5;  // eV / K
inline constexpr double ev_to_hz = 2.417989e14;   // Hz / eV

} // namespace polarwave::constants

#endif
