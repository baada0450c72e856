#include "polarwave/polariton.hpp"

#include <cmath>

#include "polarwave/numerics.hpp"

namespace polarwave {

using constants::hbar_c;

BranchPair hopfield(double k, const SystemParams& p) {
    if (std::abs(k) > p.brillouin_edge() * (1.0 + 1e-12))
        throw Error(ErrorKind::OutOfRange, "k outside the first Brillouin zone");

    const double ec = photon_dispersion(k, p);
    const double delta = 0.5 * (ec - p.e_a);
    const std::complex<double> g = coupling_g(k, p);
    const double g2 = std::norm(g);
    const double d = std::hypot(delta, std::sqrt(g2));
    if (d <= 0.0)
        throw Error(ErrorKind::DegenerateCoupling,
                    "D_k = 0: coupling and detuning both vanish");

    // d_minus = D - delta, d_plus = D + delta, the smaller one via g^2/(D+|delta|)
    double d_minus, d_plus;
    if (delta >= 0.0) {
        d_plus = d + delta;
        d_minus = g2 / d_plus;
    } else {
        d_minus = d - delta;
        d_plus = g2 / d_minus;
    }

    const double mean = 0.5 * (ec + p.e_a);

    // g = 0 with finite detuning: fully decoupled photon/excitation pair,
    // where the Y surd becomes 0/0; the limit has unit magnitude.
    const std::complex<double> y_decoupled(0.0, -1.0);

    PolaritonMode up;
    up.branch = Branch::Upper;
    up.k = k;
    up.energy = mean + d;
    up.x = std::sqrt(d_minus / (2.0 * d));
    up.y = (d_minus > 0.0) ? g / std::sqrt(2.0 * d * d_minus) : y_decoupled;

    PolaritonMode lo;
    lo.branch = Branch::Lower;
    lo.k = k;
    lo.energy = mean - d;
    lo.x = -std::sqrt(d_plus / (2.0 * d));
    lo.y = (d_plus > 0.0) ? g / std::sqrt(2.0 * d * d_plus) : y_decoupled;

    return {up, lo};
}

PolaritonMode hopfield_branch(double k, const SystemParams& p, Branch branch) {
    BranchPair pair = hopfield(k, p);
    return branch == Branch::Upper ? pair.upper : pair.lower;
}

double rabi_splitting(const SystemParams& p) {
    return 2.0 * rabi_d(0.0, p);
}

double effective_mass(Branch branch, double k0, const SystemParams& p, double h) {
    if (std::abs(k0) + 2.0 * h > p.brillouin_edge())
        throw Error(ErrorKind::OutOfRange, "stencil leaves the Brillouin zone");
    auto energy = [&](double k) { return hopfield_branch(k, p, branch).energy; };
    const double curvature = numerics::second_derivative(energy, k0, h);
    if (std::abs(curvature) < 1e-30)
        throw Error(ErrorKind::CurvatureTooSmall,
                    "flat band: |d2E/dk2| < 1e-30, mass undefined");
    return hbar_c * hbar_c / curvature;
}

} // namespace polarwave
