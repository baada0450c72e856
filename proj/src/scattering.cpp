#include "polarwave/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polarwave {

using constants::hbar_c;
using std::complex;

double lambda_energy(double m_pol, const SystemParams& p) {
    if (!(m_pol > 0)) throw Error(ErrorKind::OutOfRange, "m_pol must be > 0");
    return hbar_c * hbar_c * M_PI * M_PI / (2.0 * p.a * p.a * m_pol);
}

namespace {

ScatteringRegime classify(double beta_abs) {
    if (beta_abs >= 1e3) return ScatteringRegime::HardCore;
    if (beta_abs < 0.05) return ScatteringRegime::Weak;
    return ScatteringRegime::Intermediate;
}

} // namespace

ScatteringResult defect_amplitude(double k, double strength,
                                  const SystemParams& p, double m_pol,
                                  bool zero_k_limit) {
    ScatteringResult r;
    r.lambda_energy = lambda_energy(m_pol, p);
    if (k <= 0.0) {
        if (!zero_k_limit)
            throw Error(ErrorKind::NonPositiveK,
                        "k must be > 0 (set the k->0 limit flag for f = -1)");
        r.f = -1.0;
        r.transmission_amp = 0.0;
        r.reflection_prob = 1.0;
        r.transmission_prob = 0.0;
        r.beta = std::numeric_limits<double>::infinity();
        r.regime = ScatteringRegime::HardCore;
        return r;
    }
    const double x2 = hopfield_branch(k, p, Branch::Lower).x2();
    const double beta =
        (strength / r.lambda_energy) * (M_PI * M_PI / (2.0 * k * p.a)) * x2;
    const complex<double> den(1.0, -beta);
    r.f = complex<double>(0.0, beta) / den;
    r.transmission_amp = 1.0 / den;
    r.reflection_prob = std::norm(r.f);
    r.transmission_prob = std::norm(r.transmission_amp);
    r.beta = beta;
    r.regime = classify(std::abs(beta));
    return r;
}

ScatteringResult impurity_amplitude(double k, double e_d,
                                    const SystemParams& p, double m_pol,
                                    bool zero_k_limit) {
    return defect_amplitude(k, e_d - p.e_a, p, m_pol, zero_k_limit);
}

std::pair<double, double> hardcore_reflection_transmission(
    double k, const SystemParams& p) {
    const PolaritonMode lo = hopfield_branch(k, p, Branch::Lower);
    return {lo.x2(), lo.y2()};
}

ChannelPair two_body_channels(double k1, double k2, const SystemParams& p,
                              bool parabolic) {
    ChannelPair out;
    out.k1_in = k1;
    out.k2_in = k2;

    if (parabolic) {
        out.channels.push_back({k1, k2, 0.0});
        if (k1 != k2) out.channels.push_back({k2, k1, 0.0});
        return out;
    }

    const double kb = p.brillouin_edge();
    const double kt = k1 + k2;
    auto e_lower = [&](double k) { return hopfield_branch(k, p, Branch::Lower).energy; };
    const double e_tot = e_lower(k1) + e_lower(k2);

    // scan k1' = k1 + kbar; both outgoing momenta must stay in zone
    const double lo = std::max(-kb, kt - kb);
    const double hi = std::min(kb, kt + kb);
    const int n_scan = 8192;
    auto g = [&](double k1p) { return e_lower(k1p) + e_lower(kt - k1p) - e_tot; };

    std::vector<double> sols;
    double prev_x = lo, prev_g = g(lo);
    for (int i = 1; i <= n_scan; ++i) {
        const double x = lo + (hi - lo) * i / n_scan;
        const double gx = g(x);
        if (prev_g == 0.0) sols.push_back(prev_x);
        if ((prev_g < 0.0 && gx > 0.0) || (prev_g > 0.0 && gx < 0.0)) {
            double a = prev_x, b = x, ga = prev_g;
            while (b - a > 1e-14 * kb) {
                const double mid = 0.5 * (a + b);
                const double gm = g(mid);
                if ((ga < 0.0) == (gm < 0.0)) {
                    a = mid;
                    ga = gm;
                } else {
                    b = mid;
                }
            }
            sols.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_g = gx;
    }
    if (prev_g == 0.0) sols.push_back(prev_x);

    std::sort(sols.begin(), sols.end());
    for (double k1p : sols) {
        if (!out.channels.empty() &&
            std::abs(k1p - (out.channels.back().k1_out)) < 1e-12 * kb)
            continue;
        Channel c;
        c.k1_out = k1p;
        c.k2_out = kt - k1p;
        c.energy_residual = std::abs(g(k1p));
        out.channels.push_back(c);
    }
    return out;
}

double ScatteringMatrix::unitarity_defect() const {
    // M^dagger M - 1, Frobenius norm
    complex<double> a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    const complex<double> e00 = std::conj(a) * a + std::conj(c) * c - 1.0;
    const complex<double> e01 = std::conj(a) * b + std::conj(c) * d;
    const complex<double> e10 = std::conj(b) * a + std::conj(d) * c;
    const complex<double> e11 = std::conj(b) * b + std::conj(d) * d - 1.0;
    return std::sqrt(std::norm(e00) + std::norm(e01) + std::norm(e10) +
                     std::norm(e11));
}

ScatteringMatrix scattering_matrix(double k1, double k2, const SystemParams& p,
                                   Branch r, Branch s) {
    const PolaritonMode m1 = hopfield_branch(k1, p, r);
    const PolaritonMode m2 = hopfield_branch(k2, p, s);
    ScatteringMatrix sm;
    sm.m[0][0] = m1.x;
    sm.m[0][1] = m2.y;
    sm.m[1][0] = m1.y;
    sm.m[1][1] = m2.x;
    return sm;
}

EntangledState entangled_state(double k1, double k2, const SystemParams& p) {
    const PolaritonMode m1 = hopfield_branch(k1, p, Branch::Lower);
    const PolaritonMode m2 = hopfield_branch(k2, p, Branch::Lower);
    EntangledState e;
    e.amp_forward = m1.y * m2.y;
    e.amp_backward = m1.x * m2.x;
    e.norm = std::norm(e.amp_forward) + std::norm(e.amp_backward);
    return e;
}

double strength_for_beta(double beta, double k, const SystemParams& p,
                         double m_pol) {
    const double x2 = hopfield_branch(k, p, Branch::Lower).x2();
    return beta * lambda_energy(m_pol, p) * 2.0 * k * p.a / (M_PI * M_PI * x2);
}

namespace {

/// In-place radix-2 inverse DFT without the 1/N factor:
/// a_n <- sum_m a_m exp(+2 pi i m n / N).  N must be a power of two.
void idft_pow2(std::vector<complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * M_PI / static_cast<double>(len);
        const complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const complex<double> u = a[i + j];
                const complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

LsSolution ls_solve(double k, const LatticeScatterSetup& setup,
                    const SystemParams& p, double m_pol) {
    if (setup.n_grid < 256)
        throw Error(ErrorKind::OutOfRange, "n_grid must be >= 256");
    if (!(m_pol > 0)) throw Error(ErrorKind::OutOfRange, "m_pol must be > 0");
    const int n = setup.n_grid;
    const double dk = 2.0 * M_PI / (n * p.a);
    const long lk = std::lround(k / dk);
    if (lk < 1) throw Error(ErrorKind::NonPositiveK, "incident k below the grid spacing");
    if (lk >= n / 2) throw Error(ErrorKind::OutOfRange, "incident k at or beyond the zone edge");
    const double ks = lk * dk;

    const int l0 = -(n / 2); // momentum indices l0 .. l0 + n - 1
    std::vector<double> de(n);
    const double kin = hbar_c * hbar_c / (2.0 * m_pol);
    for (int i = 0; i < n; ++i) {
        const double kp = (l0 + i) * dk;
        de[i] = kin * (ks * ks - kp * kp);
    }

    double eta = setup.eta;
    if (eta <= 0.0) {
        // five times the mean on-shell level spacing, +-10 grid steps
        const int ic = static_cast<int>(lk) - l0;
        const int jlo = std::max(0, ic - 10), jhi = std::min(n - 1, ic + 10);
        double acc = 0.0;
        for (int j = jlo; j < jhi; ++j) acc += std::abs(de[j + 1] - de[j]);
        eta = 5.0 * acc / (jhi - jlo);
    }

    // Pole resolution guards: enough states below the on-shell energy, and
    // enough grid points inside the regulator window.
    {
        int below = 0, inside = 0;
        for (int i = 0; i < n; ++i) {
            const double kp = (l0 + i) * dk;
            if (kp > 0.0 && kp < ks) ++below;
            if (std::abs(de[i]) <= eta) ++inside;
        }
        if (below < 8 || inside < 8)
            throw Error(ErrorKind::GridTooCoarse,
                        "on-shell point unresolved: " + std::to_string(below) +
                            " states below E(k), " + std::to_string(inside) +
                            " inside the eta window");
    }

    const double xk2 = hopfield_branch(ks, p, Branch::Lower).x2();
    const double xk = -std::sqrt(xk2);
    const double u = setup.potential_site_strength;

    const double e_on = hopfield_branch(ks, p, Branch::Lower).energy;
    std::vector<complex<double>> c(n);
    complex<double> s_sum(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        const double kp = (l0 + i) * dk;
        double w = xk2;
        if (setup.exact_weights) w = hopfield_branch(kp, p, Branch::Lower).x2();
        c[i] = w / complex<double>(de[i], eta);
        if (!setup.lower_only) {
            // upper-branch intermediate states, far off shell
            const PolaritonMode up = hopfield_branch(kp, p, Branch::Upper);
            c[i] += up.x2() / complex<double>(e_on - up.energy, eta);
        }
        s_sum += c[i];
    }
    const complex<double> s = s_sum / static_cast<double>(n);

    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    const complex<double> psi0 = (xk * amp) / (1.0 - u * s);

    // o_n = (1/N) sum_l c_l exp(2 pi i l n / N): one inverse DFT
    std::vector<complex<double>> o(n);
    if (is_pow2(n)) {
        std::vector<complex<double>> buf(n);
        for (int i = 0; i < n; ++i) {
            const long m = ((l0 + i) % n + n) % n;
            buf[m] += c[i];
        }
        idft_pow2(buf);
        for (int i = 0; i < n; ++i) {
            const long m = ((l0 + i) % n + n) % n;
            o[i] = buf[m] / static_cast<double>(n);
        }
    } else {
        std::vector<complex<double>> tw(n);
        for (int j = 0; j < n; ++j) {
            const double ang = 2.0 * M_PI * j / n;
            tw[j] = complex<double>(std::cos(ang), std::sin(ang));
        }
        for (int i = 0; i < n; ++i) {
            const long nn = l0 + i;
            complex<double> acc(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                const long l = l0 + j;
                const long idx = ((l * nn) % n + n) % n;
                acc += c[j] * tw[idx];
            }
            o[i] = acc / static_cast<double>(n);
        }
    }

    LsSolution sol;
    sol.k_used = ks;
    sol.eta_used = eta;
    sol.psi.resize(n);
    for (int i = 0; i < n; ++i) {
        const double z = (l0 + i) * p.a;
        const complex<double> incident =
            xk * amp * std::exp(complex<double>(0.0, ks * z));
        sol.psi[i] = incident + u * o[i] * psi0;
    }

    // least-squares f against the reflected wave on the incoming side;
    // the regulator attenuates the scattered wave as exp(-kappa |z|) with
    // kappa = m eta / (hbar^2 k), which is part of the fit basis
    const double kappa = m_pol * eta / (hbar_c * hbar_c * ks);
    const int n_lo = static_cast<int>(std::floor(setup.fit_window_hi * n));
    const int n_hi = static_cast<int>(std::ceil(setup.fit_window_lo * n));
    complex<double> bb(0.0, 0.0), br(0.0, 0.0);
    std::vector<int> window;
    for (int i = 0; i < n; ++i) {
        const int nn = l0 + i;
        if (nn < -n_lo || nn > -n_hi) continue;
        window.push_back(i);
        const double z = nn * p.a;
        const complex<double> b = xk * amp *
                                  std::exp(complex<double>(0.0, -ks * z)) *
                                  std::exp(-kappa * std::abs(z));
        const complex<double> r =
            sol.psi[i] - xk * amp * std::exp(complex<double>(0.0, ks * z));
        bb += std::conj(b) * b;
        br += std::conj(b) * r;
    }
    if (window.empty() || !(std::abs(bb) > 0.0))
        throw Error(ErrorKind::NoConvergence, "empty or fully attenuated fit window");
    sol.f_extracted = br / bb;

    double res2 = 0.0;
    for (int i : window) {
        const int nn = l0 + i;
        const double z = nn * p.a;
        const complex<double> b = xk * amp *
                                  std::exp(complex<double>(0.0, -ks * z)) *
                                  std::exp(-kappa * std::abs(z));
        const complex<double> r =
            sol.psi[i] - xk * amp * std::exp(complex<double>(0.0, ks * z));
        res2 += std::norm(r - sol.f_extracted * b);
    }
    sol.fit_residual = std::sqrt(res2 / window.size()) / (std::abs(xk) * amp);
    if (sol.fit_residual > 1e-2)
        throw Error(ErrorKind::NoConvergence,
                    "asymptotic fit residual " + std::to_string(sol.fit_residual) +
                        " exceeds 1e-2 of the wave amplitude");

    sol.closed_form_fsq =
        defect_amplitude(ks, u, p, m_pol).reflection_prob;
    return sol;
}

} // namespace polarwave
