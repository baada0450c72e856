#include "doctest.h"

#include <cmath>

#include "polarwave/core_model.hpp"
#include "polarwave/interactions.hpp"

using namespace polarwave;

namespace {
SystemParams reference() { return SystemParams::defaults(); }

SystemParams with_detuning(double det, double k = 1e-6) {
    SystemParams p = reference();
    p.q0 = q0_for_detuning(det, k, p);
    return p;
}
}

TEST_CASE("on-site strength") {
    SystemParams p = reference();
    CHECK(onsite_u(p) == doctest::Approx(1.0));
    p.e_a = 2.0;
    CHECK(onsite_u(p) == doctest::Approx(2.0));
    // U dwarfs the coupling, so coupling-induced interaction terms drop out
    CHECK(onsite_u(reference()) / coupling_g_abs(0.0, reference()) > 1e4);
}

TEST_CASE("interaction parameter bundle is self-consistent") {
    SystemParams p = reference();
    const InteractionParams ip = interaction_params(p, 4.0);
    CHECK(ip.u_onsite > 0);
    CHECK(ip.delta_lattice > 0);
    const double rebuilt = 4.0 * M_PI * constants::hbar_c * constants::hbar_c /
                           (ip.m_eff * p.a * ip.l_used);
    CHECK(std::abs(ip.delta_lattice - rebuilt) <= 1e-12 * rebuilt);
}

TEST_CASE("lattice interaction constant Delta") {
    SystemParams p = reference(); // l_fiber = 1e7 A = 1 mm
    const double d = delta_strength(4.0, p);
    CHECK(d == doctest::Approx(2.4465427487e-4).epsilon(1e-9));

    SUBCASE("1/L scaling") {
        SystemParams p2 = p;
        p2.l_fiber *= 2.0;
        CHECK(delta_strength(4.0, p2) == doctest::Approx(0.5 * d).epsilon(1e-14));
    }
    SUBCASE("scattering-length form is Delta * L / a") {
        const double u_form = 4.0 * M_PI * constants::hbar_c * constants::hbar_c /
                              (4.0 * p.a * p.a);
        CHECK(d * p.l_fiber / p.a == doctest::Approx(u_form).epsilon(1e-12));
    }
}

TEST_CASE("effective potential Delta |X|^4") {
    SystemParams p = reference();
    const double d = delta_strength(4.0, p);
    SUBCASE("resonance gives Delta/4") {
        CHECK(effective_potential(1e-10, p, 4.0) ==
              doctest::Approx(d / 4.0).epsilon(1e-8));
        CHECK(effective_potential(1e-10, p, 4.0) ==
              doctest::Approx(6.1163568717e-5).epsilon(1e-7));
    }
    SUBCASE("photonic limit vanishes") {
        CHECK(effective_potential(1e-6, with_detuning(-0.5), 4.0) < 1e-12);
    }
    SUBCASE("ties to the Hopfield fraction at every k") {
        for (double k : {1e-6, 1e-5, 1e-4, 3e-4}) {
            const double x2 = hopfield_branch(k, p, Branch::Lower).x2();
            CHECK(effective_potential(k, p, 4.0) ==
                  doctest::Approx(d * x2 * x2).epsilon(1e-12));
        }
    }
    SUBCASE("monotone decay toward negative detuning") {
        double prev = effective_potential(1e-6, with_detuning(0.0), 4.0);
        for (int i = 1; i <= 20; ++i) {
            const double det = -1e-3 * i / 20.0;
            const double cur = effective_potential(1e-6, with_detuning(det), 4.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("two-mode interaction") {
    SystemParams p = reference();
    const double d = delta_strength(4.0, p);
    SUBCASE("resonance value Delta/2") {
        const double v = mode_interaction_v(1e-10, -1e-10, p, 4.0);
        CHECK(v == doctest::Approx(d / 2.0).epsilon(1e-8));
        CHECK(v == doctest::Approx(1.2232713743e-4).epsilon(1e-7));
    }
    SUBCASE("photonic leg kills it") {
        CHECK(mode_interaction_v(1e-6, -1e-6, with_detuning(-0.5), 4.0) < 1e-11);
    }
    SUBCASE("symmetric in the two momenta") {
        CHECK(mode_interaction_v(1e-5, 3e-5, p, 4.0) ==
              doctest::Approx(mode_interaction_v(3e-5, 1e-5, p, 4.0))
                  .epsilon(1e-14));
    }
    SUBCASE("equal momenta reduce to twice the effective potential") {
        for (double k : {1e-6, 5e-5, 2e-4}) {
            CHECK(mode_interaction_v(k, k, p, 4.0) ==
                  doctest::Approx(2.0 * effective_potential(k, p, 4.0))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("thermal de Broglie wavelength") {
    CHECK(thermal_de_broglie_kt(4.0, 0.025) ==
          doctest::Approx(1.5641428159e4).epsilon(1e-9));
    CHECK(thermal_de_broglie(4.0, 25.0) ==
          doctest::Approx(5.3283159e4).epsilon(1e-6));
    // quartering T doubles the wavelength
    CHECK(thermal_de_broglie(4.0, 25.0) ==
          doctest::Approx(2.0 * thermal_de_broglie(4.0, 100.0)).epsilon(1e-12));
}

TEST_CASE("diluteness flag") {
    SystemParams p = reference();
    SUBCASE("room temperature is marginal, not dilute") {
        DilutenessReport r = diluteness(thermal_de_broglie_kt(4.0, 0.025), p);
        CHECK(r.ratio == doctest::Approx(3.128).epsilon(1e-3));
        CHECK(!r.dilute);
    }
    SUBCASE("25 K is one order of magnitude, dilute") {
        DilutenessReport r = diluteness(thermal_de_broglie(4.0, 25.0), p);
        CHECK(r.ratio == doctest::Approx(10.66).epsilon(1e-3));
        CHECK(r.dilute);
    }
    SUBCASE("shrinking the lattice constant scales the ratio") {
        SystemParams p10 = p;
        p10.a = p.a / 10.0;
        CHECK(diluteness(1e4, p10).ratio ==
              doctest::Approx(10.0 * diluteness(1e4, p).ratio).epsilon(1e-12));
    }
}

TEST_CASE("sound velocity") {
    const double ubar = 6.1163568717e-5; // Delta/4 at the reference working point
    CHECK(sound_velocity(1.0, ubar, 4.0) ==
          doctest::Approx(5.5300802e-3).epsilon(1e-6));
    CHECK(sound_velocity(0.0, ubar, 4.0) == 0.0);
    CHECK(sound_velocity(0.25, ubar, 4.0) ==
          doctest::Approx(0.5 * sound_velocity(1.0, ubar, 4.0)).epsilon(1e-12));
    CHECK_THROWS_AS((void)sound_velocity(1.5, ubar, 4.0), Error);
}

TEST_CASE("four-leg vertex") {
    SystemParams p = reference();
    const double d = delta_strength(4.0, p);
    SUBCASE("all-lower small-k reduction") {
        const double v = interaction_vertex(1e-8, 2e-8, 1e-8, Branch::Lower,
                                            Branch::Lower, Branch::Lower,
                                            Branch::Lower, p, 4.0);
        CHECK(v == doctest::Approx(d / 4.0).epsilon(1e-4));
    }
    SUBCASE("photonic leg suppresses the vertex") {
        SystemParams pd = with_detuning(-0.5);
        const double v = interaction_vertex(1e-6, 1e-6, 0.0, Branch::Lower,
                                            Branch::Lower, Branch::Lower,
                                            Branch::Lower, pd, 4.0);
        CHECK(std::abs(v) < 1e-12);
    }
    SUBCASE("two-ordering combination rebuilds hbar V") {
        // hbar V_{k1,k2} = U^{rsuw}(k1,k2,k2-k1) + U^{rswu}(k1,k2,0)
        const double k1 = 2e-5, k2 = -3e-5;
        const double u1 = interaction_vertex(k1, k2, k2 - k1, Branch::Lower,
                                             Branch::Lower, Branch::Lower,
                                             Branch::Lower, p, 4.0);
        const double u2 = interaction_vertex(k1, k2, 0.0, Branch::Lower,
                                             Branch::Lower, Branch::Lower,
                                             Branch::Lower, p, 4.0);
        CHECK(u1 + u2 ==
              doctest::Approx(mode_interaction_v(k1, k2, p, 4.0)).epsilon(1e-12));
    }
    SUBCASE("out-of-zone leg is rejected") {
        CHECK_THROWS_AS((void)interaction_vertex(6e-4, 0.0, 6e-4, Branch::Lower,
                                                 Branch::Lower, Branch::Lower,
                                                 Branch::Lower, p, 4.0),
                        Error);
    }
}
