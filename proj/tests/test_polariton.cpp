#include "doctest.h"

#include <cmath>
#include <random>

#include "polarwave/core_model.hpp"
#include "polarwave/polariton.hpp"

using namespace polarwave;

namespace {
SystemParams reference() { return SystemParams::defaults(); }

SystemParams with_detuning(double det, double k = 1e-6) {
    SystemParams p = reference();
    p.q0 = q0_for_detuning(det, k, p);
    return p;
}
}

TEST_CASE("half-half mixing at resonance") {
    const BranchPair bp = hopfield(0.0, reference());
    CHECK(bp.upper.x2() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bp.upper.y2() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bp.lower.x2() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bp.lower.y2() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("branch content in the detuned limits") {
    SUBCASE("photon above the transition: lower branch turns excitonic") {
        const BranchPair bp = hopfield(1e-6, with_detuning(0.5));
        CHECK(bp.lower.x2() > 0.9999);
        CHECK(bp.upper.y2() > 0.9999);
    }
    SUBCASE("photon below the transition: lower branch turns photonic") {
        const BranchPair bp = hopfield(1e-6, with_detuning(-0.5));
        CHECK(bp.lower.y2() > 0.9999);
        CHECK(bp.upper.x2() > 0.9999);
    }
}

TEST_CASE("trace and gap identities") {
    SystemParams p = reference();
    for (double k : {0.0, 1e-6, 5e-5, 2e-4, 6e-4}) {
        const BranchPair bp = hopfield(k, p);
        const double ec = photon_dispersion(k, p);
        CHECK(bp.upper.energy + bp.lower.energy ==
              doctest::Approx(ec + p.e_a).epsilon(1e-14));
        CHECK(bp.upper.energy - bp.lower.energy ==
              doctest::Approx(2.0 * rabi_d(k, p)).epsilon(1e-12));
        CHECK(bp.upper.energy > bp.lower.energy);
    }
}

TEST_CASE("normalization and orthogonality across a (k, detuning) grid") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uk(1e-7, 6e-4);
    std::uniform_real_distribution<double> ud(-0.09, 0.09);
    for (int i = 0; i < 1000; ++i) {
        const double k = uk(rng);
        SystemParams p = reference();
        p.q0 = q0_for_detuning(ud(rng), k, p);
        const BranchPair bp = hopfield(k, p);
        CHECK(std::abs(bp.upper.x2() + bp.upper.y2() - 1.0) <= 1e-12);
        CHECK(std::abs(bp.lower.x2() + bp.lower.y2() - 1.0) <= 1e-12);
        const std::complex<double> ortho =
            bp.upper.x * std::conj(bp.lower.x) + bp.upper.y * std::conj(bp.lower.y);
        CHECK(std::abs(ortho) <= 1e-12);
    }
}

TEST_CASE("avoided crossing minimum equals 2|g| at the resonance point") {
    SystemParams p = reference();
    double min_gap = 1e30, min_k = 0.0;
    for (int i = -400; i <= 400; ++i) {
        const double k = i * 1.5e-6;
        const BranchPair bp = hopfield(k, p);
        const double gap = bp.upper.energy - bp.lower.energy;
        if (gap < min_gap) {
            min_gap = gap;
            min_k = k;
        }
    }
    CHECK(min_k == doctest::Approx(0.0));
    CHECK(min_gap == doctest::Approx(2.0 * coupling_g_abs(0.0, p)).epsilon(1e-10));
}

TEST_CASE("rabi splitting") {
    SystemParams p = reference();
    CHECK(rabi_splitting(p) == doctest::Approx(1.5178745666e-5).epsilon(1e-9));
    const BranchPair bp = hopfield(0.0, p);
    CHECK(rabi_splitting(p) ==
          doctest::Approx(bp.upper.energy - bp.lower.energy).epsilon(1e-14));

    SUBCASE("finite detuning broadens the splitting") {
        SystemParams pd = with_detuning(-1e-5, 0.0);
        CHECK(rabi_splitting(pd) > 2.0 * coupling_g_abs(0.0, pd));
    }
    SUBCASE("decoupled limit reduces to 2|delta_0|") {
        SystemParams pd = with_detuning(-1e-3, 0.0);
        pd.mu = 0.0;
        CHECK(rabi_splitting(pd) == doctest::Approx(1e-3).epsilon(1e-9));
    }
}

TEST_CASE("degenerate coupling error") {
    SystemParams p = reference();
    p.mu = 0.0; // g = 0 and delta_0 = 0 at resonance
    CHECK_THROWS_AS((void)hopfield(0.0, p), Error);
}

TEST_CASE("effective mass") {
    SystemParams p = reference();
    const double m_c = photon_mass_energy(p);

    SUBCASE("lower branch at resonance carries twice the photon mass") {
        const double m = effective_mass(Branch::Lower, 0.0, p);
        CHECK(m > 0.0);
        CHECK(std::abs(m - 2.0 * m_c) / (2.0 * m_c) < 1e-3);
    }
    SUBCASE("upper branch at resonance: same magnitude") {
        const double m = effective_mass(Branch::Upper, 0.0, p);
        CHECK(std::abs(m - 2.0 * m_c) / (2.0 * m_c) < 1e-3);
    }
    SUBCASE("photonic limit approaches the bare photon mass") {
        SystemParams pd = with_detuning(-0.1, 0.0);
        const double m = effective_mass(Branch::Lower, 0.0, pd);
        const double m_c_d = photon_mass_energy(pd);
        CHECK(std::abs(m - m_c_d) / m_c_d < 0.01);
    }
    SUBCASE("numerically flat band reports CurvatureTooSmall") {
        // h far below the energy resolution: every stencil point collapses
        // onto the same double and the curvature is exactly zero
        try {
            (void)effective_mass(Branch::Lower, 0.0, p, 1e-13);
            FAIL("expected CurvatureTooSmall");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::CurvatureTooSmall);
        }
    }
}
