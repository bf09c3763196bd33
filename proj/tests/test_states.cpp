#include "doctest.h"

#include <cmath>

#include "qrayleigh/errors.hpp"
#include "qrayleigh/states.hpp"

using namespace qrayleigh;

TEST_CASE("Gibbs weights") {
    const QubitSpec q{1.0, 2.0};
    const auto w = gibbs_weights(2.0, q);
    CHECK(w.ground == doctest::Approx(0.8807970779778823).epsilon(1e-14));
    CHECK(w.excited == doctest::Approx(0.11920292202211755).epsilon(1e-14));
    const auto v = gibbs_weights(1.0 / 0.6, q);
    CHECK(v.ground == doctest::Approx(0.8411308951190849).epsilon(1e-14));
    CHECK_THROWS(gibbs_weights(0.0, q));
    CHECK_THROWS(gibbs_weights(-1.0, q));
    const auto cold = gibbs_weights(800.0, q);
    CHECK(cold.ground == 1.0);
    CHECK(cold.excited >= 0.0);
}

TEST_CASE("coherence bounds") {
    const QubitSpec q{1.0, 2.0};
    CHECK(coherence_bounds(ProjectileKind::Discordant, 2.0, q).upper == doctest::Approx(0.10499358540350649));
    CHECK(coherence_bounds(ProjectileKind::Entangled, 2.0, q).upper == doctest::Approx(0.3240271368319427));
    CHECK(coherence_bounds(ProjectileKind::Classical, 2.0, q).upper == 0.0);
}

TEST_CASE("projectile states") {
    BathParams b;
    b.kind = ProjectileKind::Discordant;
    b.coherence = 0.104;
    const auto rho = projectile_state(b);
    CHECK(rho(1, 2).real() == doctest::Approx(0.104));
    CHECK(rho.population(0) == doctest::Approx(0.8807970779778823 * 0.8807970779778823));

    b.coherence = 0.2;
    CHECK_THROWS_AS(projectile_state(b), DomainError);
    b.kind = ProjectileKind::Entangled;
    CHECK_NOTHROW(projectile_state(b));
    const auto e = projectile_state(b);
    CHECK(e(0, 3).real() == doctest::Approx(0.2));
    CHECK(e.population(1) == 0.0);

    b.coherence = -0.33;
    CHECK_THROWS_AS(projectile_state(b), DomainError);
}

TEST_CASE("normalization of kinds") {
    BathParams b;
    b.kind = ProjectileKind::Product;
    b.coherence = 0.05;
    const auto n = b.normalized();
    CHECK(n.kind == ProjectileKind::Discordant);
    CHECK(n.coherence == 0.0);
    b.kind = ProjectileKind::Entangled;
    CHECK(b.lambda() == 0.0);
    CHECK(parse_kind("entangled") == ProjectileKind::Entangled);
    CHECK(parse_scenario("sequential") == Scenario::Sequential);
    CHECK_THROWS(parse_kind("quantum"));
}

TEST_CASE("thermal qubit") {
    const auto rho = thermal_qubit(2.0, QubitSpec{1.0, 2.0});
    CHECK(rho.population(1) == doctest::Approx(0.11920292202211755));
    CHECK(std::abs(rho(0, 1)) == 0.0);
}
