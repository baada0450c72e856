#ifndef POLARWAVE_POLARITON_HPP
#define POLARWAVE_POLARITON_HPP

#include <complex>
#include <utility>

#include "polarwave/core_model.hpp"

namespace polarwave {

enum class Branch { Upper, Lower };

/**
 * One polariton eigenmode: branch energy and Hopfield amplitudes.
 * x is the excitation content, y the photon content, |x|^2 + |y|^2 = 1.
 */
struct PolaritonMode {
    Branch branch = Branch::Lower;
    double k = 0.0;
    double energy = 0.0;
    std::complex<double> x;
    std::complex<double> y;

    double x2() const { return std::norm(x); }
    double y2() const { return std::norm(y); }
};

struct BranchPair {
    PolaritonMode upper;
    PolaritonMode lower;
};

/**
 * Diagonalize the excitation-photon block at wave number k.
 *
 * X^pm = pm sqrt((D -+ delta)/2D), Y^pm = g / sqrt(2D (D -+ delta)),
 * E_pm = (E_C + E_A)/2 pm D.  The surds are rearranged so that the small
 * factor D -+ |delta| is always formed as |g|^2 / (D + |delta|); this keeps
 * normalization and orthogonality exact to machine precision at extreme
 * detunings.
 */
BranchPair hopfield(double k, const SystemParams& p);

PolaritonMode hopfield_branch(double k, const SystemParams& p, Branch branch);

/// Rabi splitting E_+(0) - E_-(0) = 2 D_0 (equals 2|g_0| at zero detuning).
double rabi_splitting(const SystemParams& p);

/**
 * Effective mass energy m c^2 = (hbar c)^2 / (d^2 E/dk^2) from the
 * Richardson-extrapolated numerical curvature of the branch dispersion.
 */
double effective_mass(Branch branch, double k0, const SystemParams& p,
                      double h = 1e-7);

} // namespace polarwave

#endif
