#include "polarwave/meanfield.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace polarwave {

using std::complex;

std::complex<double> drive_from_external(double gamma_mirror,
                                         const std::complex<double>& y_k,
                                         const std::complex<double>& script_f) {
    return gamma_mirror * std::conj(y_k) * script_f;
}

DriveSpec resolve_drive(DriveSpec d, const SystemParams& p) {
    if (d.script_f1)
        d.f1 = drive_from_external(
            d.gamma_mirror, hopfield_branch(d.k1, p, Branch::Lower).y, *d.script_f1);
    if (d.script_f2)
        d.f2 = drive_from_external(
            d.gamma_mirror, hopfield_branch(d.k2, p, Branch::Lower).y, *d.script_f2);
    return d;
}

double polariton_damping(double k, Branch branch, const SystemParams& p) {
    const PolaritonMode m = hopfield_branch(k, p, branch);
    return 0.5 * p.gamma_a * m.x2() + 0.5 * p.gamma_c * m.y2();
}

void eom_rhs(const TwoModeState& state, const DriveSpec& drive, double v,
             const ModeFreqs& freqs, complex<double>& da1,
             complex<double>& da2) {
    const complex<double> i(0.0, 1.0);
    const double det1 = freqs.omega_pol1 - drive.omega1;
    const double det2 = freqs.omega_pol2 - drive.omega2;
    da1 = -i * ((det1 + v * std::norm(state.a2)) * state.a1 + drive.f1) -
          freqs.gamma1 * state.a1;
    da2 = -i * ((det2 + v * std::norm(state.a1)) * state.a2 + drive.f2) -
          freqs.gamma2 * state.a2;
}

namespace {

TwoModeState amplitudes_for(const DriveSpec& d, const ModeFreqs& fr, double v,
                            double n1, double n2) {
    const complex<double> i(0.0, 1.0);
    const double det1 = d.omega1 - fr.omega_pol1 - v * n2;
    const double det2 = d.omega2 - fr.omega_pol2 - v * n1;
    const complex<double> a1 = d.f1 / (det1 + i * fr.gamma1);
    const complex<double> a2 = d.f2 / (det2 + i * fr.gamma2);
    return TwoModeState::from_amplitudes(a1, a2);
}

} // namespace

TwoModeState relax_to_steady_state(const DriveSpec& drive, double v,
                                   const ModeFreqs& freqs,
                                   double gamma_multiples) {
    const double gmin = std::min(freqs.gamma1, freqs.gamma2);
    if (!(gmin > 0))
        throw Error(ErrorKind::OutOfRange, "relaxation needs positive damping");
    // frequency scale sets the step; |a_i(t)| <= |F_i|/Gamma_i holds along
    // the whole trajectory from vacuum, so the linear response bounds V N
    const double n_est = std::max(std::norm(drive.f1) / (freqs.gamma1 * freqs.gamma1),
                                  std::norm(drive.f2) / (freqs.gamma2 * freqs.gamma2));
    const double scale =
        std::max({freqs.gamma1, freqs.gamma2,
                  std::abs(freqs.omega_pol1 - drive.omega1),
                  std::abs(freqs.omega_pol2 - drive.omega2), std::abs(v) * n_est});
    const double dt = 0.05 / scale;
    const double t_end = gamma_multiples / gmin;
    if (t_end / dt > 2e8)
        throw Error(ErrorKind::NoConvergence,
                    "relaxation infeasible: " + std::to_string(t_end / dt) +
                        " steps to settle at this stiffness");

    numerics::OdeState y0{0.0, {complex<double>(0, 0), complex<double>(0, 0)}};
    auto rhs = [&](double, const std::vector<complex<double>>& y,
                   std::vector<complex<double>>& dy) {
        TwoModeState st = TwoModeState::from_amplitudes(y[0], y[1]);
        eom_rhs(st, drive, v, freqs, dy[0], dy[1]);
    };
    numerics::OdeState yf = numerics::rk4_evolve(rhs, std::move(y0), t_end, dt);
    return TwoModeState::from_amplitudes(yf.y[0], yf.y[1]);
}

TwoModeState steady_state_coupled(const DriveSpec& drive, double v,
                                  const ModeFreqs& freqs) {
    if (!(freqs.gamma1 > 0) || !(freqs.gamma2 > 0))
        throw Error(ErrorKind::OutOfRange, "dampings must be > 0");
    const double p1 = std::norm(drive.f1), p2 = std::norm(drive.f2);
    auto map = [&](const std::vector<double>& nn) {
        const double d1 = drive.omega1 - freqs.omega_pol1 - v * nn[1];
        const double d2 = drive.omega2 - freqs.omega_pol2 - v * nn[0];
        return std::vector<double>{p1 / (d1 * d1 + freqs.gamma1 * freqs.gamma1),
                                   p2 / (d2 * d2 + freqs.gamma2 * freqs.gamma2)};
    };
    try {
        std::vector<double> n =
            numerics::damped_fixed_point(map, {0.0, 0.0}, 0.5, 20000, 1e-13);
        return amplitudes_for(drive, freqs, v, n[0], n[1]);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoConvergence) throw;
        TwoModeState st = relax_to_steady_state(drive, v, freqs);
        // confirm it is actually stationary
        const std::vector<double> n = map({st.n1, st.n2});
        const double r = std::hypot(n[0] - st.n1, n[1] - st.n2);
        if (r > 1e-6 * (1.0 + st.n1 + st.n2))
            throw Error(ErrorKind::NoConvergence,
                        "both solvers failed, residual " + std::to_string(r));
        return amplitudes_for(drive, freqs, v, st.n1, st.n2);
    }
}

std::vector<ProbeSpectrumPoint> probe_spectrum(
    const std::vector<double>& omega_rel_grid, double n_pump,
    double probe_power, double v, double gamma2) {
    if (n_pump < 0)
        throw Error(ErrorKind::OutOfRange, "pump occupation must be >= 0");
    std::vector<ProbeSpectrumPoint> out;
    out.reserve(omega_rel_grid.size());
    for (double w : omega_rel_grid) {
        ProbeSpectrumPoint pt;
        pt.omega_rel = w;
        const double shifted = w - v * n_pump;
        pt.n_probe = probe_power / (shifted * shifted + gamma2 * gamma2);
        pt.n_ref = probe_power / (w * w + gamma2 * gamma2);
        out.push_back(pt);
    }
    return out;
}

std::vector<double> symmetric_pump(double drive_power, double v, double gamma) {
    if (drive_power < 0)
        throw Error(ErrorKind::OutOfRange, "drive power must be >= 0");
    if (v == 0.0) {
        if (gamma == 0.0)
            throw Error(ErrorKind::OutOfRange, "v = 0 and gamma = 0 leave N undefined");
        return {drive_power / (gamma * gamma)};
    }
    numerics::CubicRoots roots =
        numerics::cubic_real_roots(v * v, 0.0, gamma * gamma, -drive_power);
    std::vector<double> out;
    for (double r : roots.roots)
        if (r >= 0.0) out.push_back(r);
    return out;
}

std::pair<double, double> bistability_turning_points(double delta_bar, double v,
                                                     double gamma) {
    const double disc = delta_bar * delta_bar - 3.0 * gamma * gamma;
    if (!(disc > 0) || v == 0.0)
        throw Error(ErrorKind::OutOfRange,
                    "no bistable window: need delta_bar^2 > 3 gamma^2 and v != 0");
    const double s = std::sqrt(disc);
    return {(2.0 * delta_bar - s) / (3.0 * v), (2.0 * delta_bar + s) / (3.0 * v)};
}

namespace {

/// Real parts of the two-mode EOM eigenvalues around a symmetric root.
double max_real_eigenvalue(double n, double delta_bar, double v, double gamma) {
    const complex<double> i(0.0, 1.0);
    // symmetric steady amplitude; the phase matters for the linearization
    const complex<double> a = std::sqrt(n) *
        std::exp(i * std::arg(1.0 / (delta_bar - v * n + i * gamma)));
    // perturbations (da1, da1*, da2, da2*)
    const complex<double> diag = -i * (-(delta_bar)+v * n) - gamma;
    Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
    const complex<double> cross_a = -i * v * a * std::conj(a); // d/d a2 of mode1
    const complex<double> cross_b = -i * v * a * a;            // d/d a2*
    j(0, 0) = diag;
    j(0, 2) = cross_a;
    j(0, 3) = cross_b;
    j(1, 1) = std::conj(diag);
    j(1, 2) = std::conj(cross_b);
    j(1, 3) = std::conj(cross_a);
    j(2, 2) = diag;
    j(2, 0) = cross_a;
    j(2, 1) = cross_b;
    j(3, 3) = std::conj(diag);
    j(3, 0) = std::conj(cross_b);
    j(3, 1) = std::conj(cross_a);
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(j, false);
    double mx = -std::numeric_limits<double>::infinity();
    for (int q = 0; q < 4; ++q) mx = std::max(mx, es.eigenvalues()[q].real());
    return mx;
}

} // namespace

std::vector<BistabilityBranch> bistability_sweep(
    double delta_bar, double v, double gamma,
    const std::vector<double>& power_grid) {
    if (!std::isfinite(delta_bar))
        throw Error(ErrorKind::OutOfRange, "delta_bar must be finite");
    std::vector<BistabilityBranch> out;
    out.reserve(power_grid.size());
    for (double power : power_grid) {
        if (!(power > 0))
            throw Error(ErrorKind::OutOfRange, "powers must be > 0");
        BistabilityBranch b;
        b.drive_power = power;
        std::vector<double> roots;
        if (v == 0.0) {
            roots.push_back(power / (delta_bar * delta_bar + gamma * gamma));
        } else {
            numerics::CubicRoots cr = numerics::cubic_real_roots(
                v * v, -2.0 * delta_bar * v,
                delta_bar * delta_bar + gamma * gamma, -power);
            for (double r : cr.roots)
                if (r >= 0.0) roots.push_back(r);
        }
        for (double n : roots) {
            const double slope = 3.0 * v * v * n * n - 4.0 * delta_bar * v * n +
                                 delta_bar * delta_bar + gamma * gamma;
            b.occupations.push_back(n);
            b.stable_slope.push_back(slope > 0.0);
            b.stable_linear.push_back(
                max_real_eigenvalue(n, delta_bar, v, gamma) <= 1e-9 * gamma);
        }
        out.push_back(std::move(b));
    }
    return out;
}

double atom_correlation(double z_n, double z_m, double k, double n_occupation,
                        const SystemParams& p) {
    if (n_occupation < 0)
        throw Error(ErrorKind::OutOfRange, "occupation must be >= 0");
    const double x2 = hopfield_branch(k, p, Branch::Lower).x2();
    return 4.0 * x2 * n_occupation / p.n_sites * std::cos(k * z_n) *
           std::cos(k * z_m);
}

} // namespace polarwave
