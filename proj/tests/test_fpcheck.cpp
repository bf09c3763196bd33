#include "doctest.h"

#include "qrayleigh/dynamics.hpp"
#include "qrayleigh/errors.hpp"
#include "qrayleigh/fpcheck.hpp"

using namespace qrayleigh;
using namespace qrayleigh::fpcheck;

namespace {

BathParams discordant(double chi, Scenario s = Scenario::Collective, double jt = 0.05) {
    BathParams b;
    b.kind = ProjectileKind::Discordant;
    b.scenario = s;
    b.coupling = jt;
    b.coherence = chi * coherence_bounds(b.kind, b.beta_b, b.qubit).upper;
    return b;
}

} // namespace

TEST_CASE("heat-equation coefficients") {
    const auto f0 = heat_equation_coefficients(discordant(0.0));
    CHECK(f0.d_polarization_coherent == 0.0);
    CHECK(f0.d_inversion_const_coherent == 0.0);

    const auto f = heat_equation_coefficients(discordant(1.0));
    CHECK(f.d_inversion(0.0) == doctest::Approx(0.024039).epsilon(1e-5));
    CHECK(f.drift_coupling == doctest::Approx(-2.0 * f.d_polarization));
    CHECK(f.d_polarization == doctest::Approx(f.d_polarization_thermal + f.d_polarization_coherent));
    const double ratio = (0.8807970779778823 - 0.11920292202211755) / (1.0 + 2.0 * 0.10499358540350649);
    CHECK(f.d_inversion_slope / f.d_inversion_const == doctest::Approx(ratio));

    BathParams e = discordant(0.0);
    e.kind = ProjectileKind::Entangled;
    CHECK_THROWS_AS(heat_equation_coefficients(e), ArgumentError);
}

TEST_CASE("Kramers-Moyal consistency") {
    for (Scenario s : {Scenario::Sequential, Scenario::Collective})
        for (double chi : {0.0, -0.7, 1.0}) {
            const auto b = discordant(chi, s, 0.7);
            const auto r = moment_consistency_check(b);
            CHECK(r.max_residual() < 1e-12);
            CHECK(r.relaxation_rate == doctest::Approx(dynamics::closed_form_coefficients(b).decay_rate));
        }
}
