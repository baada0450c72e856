#ifndef POLARWAVE_NUMERICS_HPP
#define POLARWAVE_NUMERICS_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "polarwave/errors.hpp"

namespace polarwave::numerics {

enum class DiscriminantSign { ThreeReal, OneReal };

struct CubicRoots {
    std::vector<double> roots; // real roots, ascending, deduplicated
    DiscriminantSign discriminant_sign = DiscriminantSign::OneReal;
};

/**
 * Real roots of c3 x^3 + c2 x^2 + c1 x + c0 = 0.  Closed-form seeds
 * (trigonometric for three real roots, Cardano otherwise) followed by one
 * round of Newton polishing per root.  Near-equal roots are merged at
 * 1e-9 relative tolerance.
 */
CubicRoots cubic_real_roots(double c3, double c2, double c1, double c0);

struct OdeState {
    double t = 0.0;
    std::vector<std::complex<double>> y;
};

/**
 * Richardson-extrapolated central second difference, O(h^4) for smooth f.
 */
template <typename F>
double second_derivative(F&& f, double x0, double h) {
    if (!(h > 0)) throw Error(ErrorKind::InvalidArgument, "h must be > 0");
    auto stencil = [&](double hh) {
        const double fp = f(x0 + hh), fm = f(x0 - hh), f0 = f(x0);
        if (!std::isfinite(fp) || !std::isfinite(fm) || !std::isfinite(f0))
            throw Error(ErrorKind::NonFinite, "function not finite near x0");
        return (fp - 2.0 * f0 + fm) / (hh * hh);
    };
    const double d_h = stencil(h);
    const double d_h2 = stencil(0.5 * h);
    return (4.0 * d_h2 - d_h) / 3.0;
}

/**
 * Classical fixed-step fourth-order Runge-Kutta for complex-vector states.
 * The final step is shortened so the trajectory ends exactly at t_end.
 */
template <typename Rhs>
OdeState rk4_evolve(Rhs&& rhs, OdeState y0, double t_end, double dt) {
    if (!(dt > 0)) throw Error(ErrorKind::InvalidArgument, "dt must be > 0");
    using C = std::complex<double>;
    const std::size_t dim = y0.y.size();
    std::vector<C> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    double t = y0.t;
    std::vector<C> y = std::move(y0.y);

    auto check_finite = [&](const std::vector<C>& v) {
        for (const C& c : v)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw Error(ErrorKind::NonFinite,
                            "state not finite at t = " + std::to_string(t));
    };

    while (t < t_end) {
        const double h = std::min(dt, t_end - t);
        rhs(t, y, k1);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        rhs(t + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        rhs(t + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * k3[i];
        rhs(t + h, tmp, k4);
        for (std::size_t i = 0; i < dim; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t += h;
        check_finite(y);
    }
    return {t_end, std::move(y)};
}

/**
 * Damped fixed-point iteration y <- (1-d) y + d map(y).  Succeeds when
 * ||map(y) - y|| <= tol (1 + ||y||).
 */
std::vector<double> damped_fixed_point(
    const std::function<std::vector<double>(const std::vector<double>&)>& map,
    std::vector<double> y0, double damping, int max_iter, double tol);

} // namespace polarwave::numerics

#endif
