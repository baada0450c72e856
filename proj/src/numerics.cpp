#include "polarwave/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace polarwave::numerics {

namespace {

double eval_cubic(double c3, double c2, double c1, double c0, double x) {
    return ((c3 * x + c2) * x + c1) * x + c0;
}

double newton_polish(double c3, double c2, double c1, double c0, double x) {
    for (int i = 0; i < 2; ++i) {
        const double f = eval_cubic(c3, c2, c1, c0, x);
        const double df = (3.0 * c3 * x + 2.0 * c2) * x + c1;
        if (df == 0.0) break;
        const double step = f / df;
        if (!std::isfinite(step)) break;
        x -= step;
    }
    return x;
}

} // namespace

CubicRoots cubic_real_roots(double c3, double c2, double c1, double c0) {
    const double cmax = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
    if (!(std::abs(c3) > 1e-30 * cmax) || c3 == 0.0)
        throw Error(ErrorKind::DegenerateLeadingCoefficient,
                    "leading cubic coefficient is vanishing");

    // depressed form t^3 + p t + q with x = t - c2/(3 c3)
    const double b = c2 / c3, c = c1 / c3, d = c0 / c3;
    const double shift = b / 3.0;
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;

    CubicRoots out;
    const double disc = -(4.0 * p * p * p + 27.0 * q * q);
    if (disc > 0.0) {
        out.discriminant_sign = DiscriminantSign::ThreeReal;
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int j = 0; j < 3; ++j)
            out.roots.push_back(m * std::cos(theta - 2.0 * M_PI * j / 3.0) - shift);
    } else {
        out.discriminant_sign = DiscriminantSign::OneReal;
        if (p == 0.0 && q == 0.0) {
            out.roots.push_back(-shift);
        } else {
            // Cardano with the numerically stable branch
            const double w = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
            const double u = std::cbrt(-q / 2.0 + (q >= 0 ? -w : w));
            const double t = (u == 0.0) ? 0.0 : u - p / (3.0 * u);
            out.roots.push_back(t - shift);
        }
    }

    for (double& r : out.roots) r = newton_polish(c3, c2, c1, c0, r);
    std::sort(out.roots.begin(), out.roots.end());

    std::vector<double> dedup;
    for (double r : out.roots) {
        if (!dedup.empty() &&
            std::abs(r - dedup.back()) <= 1e-9 * std::max(1.0, std::abs(r)))
            continue;
        dedup.push_back(r);
    }
    out.roots = std::move(dedup);
    return out;
}

std::vector<double> damped_fixed_point(
    const std::function<std::vector<double>(const std::vector<double>&)>& map,
    std::vector<double> y0, double damping, int max_iter, double tol) {
    if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tol must be > 0");
    if (!(damping > 0.0) || damping > 1.0)
        throw Error(ErrorKind::InvalidArgument, "damping must be in (0, 1]");

    auto norm = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };

    std::vector<double> y = std::move(y0);
    double residual = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        const std::vector<double> fy = map(y);
        double r2 = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double d = fy[i] - y[i];
            r2 += d * d;
        }
        residual = std::sqrt(r2);
        if (residual <= tol * (1.0 + norm(y))) return y;
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = (1.0 - damping) * y[i] + damping * fy[i];
    }
    throw Error(ErrorKind::NoConvergence,
                "fixed point residual " + std::to_string(residual) +
                    " after " + std::to_string(max_iter) + " iterations");
}

} // namespace polarwave::numerics
