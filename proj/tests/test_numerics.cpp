#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "polarwave/numerics.hpp"

using namespace polarwave;
using namespace polarwave::numerics;
using std::complex;

TEST_CASE("second_derivative") {
    SUBCASE("exact on quadratics") {
        const double d = second_derivative([](double x) { return x * x; }, 3.7, 1e-3);
        CHECK(std::abs(d - 2.0) < 1e-8);
    }
    SUBCASE("cos at 0") {
        const double d = second_derivative([](double x) { return std::cos(x); }, 0.0, 1e-2);
        CHECK(std::abs(d + 1.0) < 1e-8);
    }
    SUBCASE("halving h barely moves the quadratic result") {
        auto f = [](double x) { return x * x; };
        const double d1 = second_derivative(f, 0.3, 1e-2);
        const double d2 = second_derivative(f, 0.3, 5e-3);
        CHECK(std::abs(d1 - d2) < 1e-10);
    }
    SUBCASE("NaN propagates as NonFinite") {
        CHECK_THROWS_AS(
            (void)second_derivative([](double) { return std::nan(""); }, 0.0, 1e-3),
            Error);
    }
}

TEST_CASE("cubic_real_roots") {
    SUBCASE("x^3 - 1") {
        CubicRoots r = cubic_real_roots(1, 0, 0, -1);
        REQUIRE(r.roots.size() == 1);
        CHECK(r.roots[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.discriminant_sign == DiscriminantSign::OneReal);
    }
    SUBCASE("(x-1)(x-2)(x-3)") {
        CubicRoots r = cubic_real_roots(1, -6, 11, -6);
        REQUIRE(r.roots.size() == 3);
        CHECK(r.roots[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.roots[1] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(r.roots[2] == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(r.discriminant_sign == DiscriminantSign::ThreeReal);
    }
    SUBCASE("degenerate leading coefficient") {
        CHECK_THROWS_AS((void)cubic_real_roots(0.0, 1, 1, 1), Error);
        CHECK_THROWS_AS((void)cubic_real_roots(1e-40, 1, 1, 1), Error);
    }
    SUBCASE("random factored cubics back-substitute within the bound") {
        std::mt19937 rng(20240811);
        std::uniform_real_distribution<double> uroot(-50.0, 50.0);
        std::uniform_real_distribution<double> uscale(0.1, 10.0);
        for (int trial = 0; trial < 400; ++trial) {
            const double r1 = uroot(rng), r2 = uroot(rng), r3 = uroot(rng);
            const double s = uscale(rng);
            const double c3 = s;
            const double c2 = -s * (r1 + r2 + r3);
            const double c1 = s * (r1 * r2 + r1 * r3 + r2 * r3);
            const double c0 = -s * r1 * r2 * r3;
            CubicRoots roots = cubic_real_roots(c3, c2, c1, c0);
            CHECK(!roots.roots.empty());
            for (double r : roots.roots) {
                const double val = ((c3 * r + c2) * r + c1) * r + c0;
                const double bound =
                    1e-9 * std::max({std::abs(c3 * r * r * r), std::abs(c2 * r * r),
                                     std::abs(c1 * r), std::abs(c0), 1e-300});
                CHECK(std::abs(val) <= bound);
            }
        }
    }
    SUBCASE("triple root") {
        CubicRoots r = cubic_real_roots(1, -3, 3, -1); // (x-1)^3
        REQUIRE(r.roots.size() == 1);
        CHECK(r.roots[0] == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("rk4_evolve") {
    SUBCASE("exponential decay") {
        auto rhs = [](double, const std::vector<complex<double>>& y,
                      std::vector<complex<double>>& dy) { dy[0] = -y[0]; };
        OdeState y0{0.0, {complex<double>(1.0, 0.0)}};
        OdeState yf = rk4_evolve(rhs, y0, 1.0, 1e-3);
        CHECK(std::abs(yf.y[0].real() - std::exp(-1.0)) < 1e-8);
    }
    SUBCASE("halving dt gains at least 8x on the exponential") {
        auto rhs = [](double, const std::vector<complex<double>>& y,
                      std::vector<complex<double>>& dy) { dy[0] = -y[0]; };
        auto err = [&](double dt) {
            OdeState y0{0.0, {complex<double>(1.0, 0.0)}};
            OdeState yf = rk4_evolve(rhs, y0, 1.0, dt);
            return std::abs(yf.y[0].real() - std::exp(-1.0));
        };
        CHECK(err(0.02) / err(0.01) >= 8.0);
    }
    SUBCASE("pure rotation preserves the norm") {
        const double omega = 1.0;
        auto rhs = [&](double, const std::vector<complex<double>>& y,
                       std::vector<complex<double>>& dy) {
            dy[0] = complex<double>(0.0, omega) * y[0];
        };
        OdeState y0{0.0, {complex<double>(1.0, 0.0)}};
        OdeState yf = rk4_evolve(rhs, y0, 10.0, 1e-3);
        CHECK(std::abs(std::abs(yf.y[0]) - 1.0) < 1e-8);
    }
    SUBCASE("undriven linear mode decays at Gamma") {
        const double gamma = 0.37;
        const double det = 2.1;
        auto rhs = [&](double, const std::vector<complex<double>>& y,
                       std::vector<complex<double>>& dy) {
            dy[0] = complex<double>(0.0, -1.0) * det * y[0] - gamma * y[0];
        };
        OdeState y0{0.0, {complex<double>(1.0, 0.0)}};
        const double t1 = 2.0;
        OdeState yf = rk4_evolve(rhs, y0, t1, 1e-4);
        const double fitted_rate = -std::log(std::abs(yf.y[0])) / t1;
        CHECK(std::abs(fitted_rate - gamma) / gamma < 1e-6);
    }
    SUBCASE("overflow reports NonFinite") {
        auto rhs = [](double, const std::vector<complex<double>>& y,
                      std::vector<complex<double>>& dy) {
            dy[0] = y[0] * y[0] * 1e4 + 1.0;
        };
        OdeState y0{0.0, {complex<double>(1.0, 0.0)}};
        CHECK_THROWS_AS((void)rk4_evolve(rhs, y0, 100.0, 0.5), Error);
    }
}

TEST_CASE("damped_fixed_point") {
    SUBCASE("cos fixed point") {
        auto map = [](const std::vector<double>& y) {
            return std::vector<double>{std::cos(y[0])};
        };
        std::vector<double> y = damped_fixed_point(map, {1.0}, 0.5, 10000, 1e-12);
        CHECK(std::abs(y[0] - 0.7390851332) < 1e-9);
    }
    SUBCASE("identity returns immediately") {
        int calls = 0;
        auto map = [&](const std::vector<double>& y) {
            ++calls;
            return y;
        };
        std::vector<double> y = damped_fixed_point(map, {3.0, -2.0}, 1.0, 5, 1e-12);
        CHECK(y[0] == 3.0);
        CHECK(calls == 1);
    }
    SUBCASE("contraction to zero") {
        auto map = [](const std::vector<double>& y) {
            return std::vector<double>{0.5 * y[0]};
        };
        std::vector<double> y = damped_fixed_point(map, {1.0}, 1.0, 200, 1e-12);
        CHECK(std::abs(y[0]) < 1e-10);
    }
    SUBCASE("divergent map reports the residual") {
        auto map = [](const std::vector<double>& y) {
            return std::vector<double>{2.0 * y[0] + 1.0};
        };
        CHECK_THROWS_AS((void)damped_fixed_point(map, {1.0}, 1.0, 50, 1e-12), Error);
    }
}
