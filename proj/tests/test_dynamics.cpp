#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdlib>

#include "qrayleigh/dynamics.hpp"
#include "qrayleigh/errors.hpp"

using namespace qrayleigh;
using namespace qrayleigh::dynamics;

namespace {

BathParams discordant(double chi, Scenario s = Scenario::Collective, double jt = 0.05) {
    BathParams b;
    b.kind = ProjectileKind::Discordant;
    b.beta_b = 2.0;
    b.scenario = s;
    b.coupling = jt;
    b.tau = 1.0;
    b.coherence = chi * coherence_bounds(b.kind, b.beta_b, b.qubit).upper;
    return b;
}

Matrix coherent_state() {
    Matrix rho = Matrix::Zero(2, 2);
    rho(0, 0) = 0.65;
    rho(1, 1) = 0.35;
    rho(0, 1) = cplx(0.1, -0.25);
    rho(1, 0) = std::conj(rho(0, 1));
    return rho;
}

} // namespace

TEST_CASE("collision factors") {
    CHECK(collectivity_alpha(Scenario::Sequential, 0.05) == doctest::Approx(0.999999).epsilon(1e-6));
    CHECK(collision_eta(Scenario::Sequential, 0.05) == doctest::Approx(0.0049896).epsilon(1e-4));
    CHECK(collision_eta_over_alpha(Scenario::Sequential, 0.05) == doctest::Approx(0.004989595130831911));
    CHECK(collectivity_alpha(Scenario::Collective, 0.7) == 1.0);
    CHECK(collision_eta(Scenario::Collective, 0.05) == doctest::Approx(0.01986702171473694));
    // Sequential alpha changes sign past J tau = pi/2 while eta/alpha stays finite.
    CHECK(collectivity_alpha(Scenario::Sequential, 2.0) < 0.0);
    CHECK(std::isfinite(collision_eta_over_alpha(Scenario::Sequential, M_PI / 2)));
}

TEST_CASE("closed-form coefficients") {
    const auto c = closed_form_coefficients(discordant(1.0));
    CHECK(c.gamma_e == doctest::Approx(0.185289).epsilon(1e-6));
    CHECK(c.decay_rate == doctest::Approx(0.02403884139697604).epsilon(1e-12));
    CHECK(c.gamma_at(0.0) == 1.0);
    CHECK(c.gamma_at(INFINITY) == 0.0);

    BathParams e = discordant(0.0);
    e.kind = ProjectileKind::Entangled;
    e.coherence = 0.3;
    const auto ce = closed_form_coefficients(e);
    CHECK(ce.gamma_e == doctest::Approx(0.11920292202211755));

    BathParams bad = discordant(0.0);
    bad.coherence = -0.6;
    CHECK_THROWS_AS(closed_form_coefficients(bad), NonThermalSteadyStateError);
    bad.coherence = 0.2;
    CHECK_THROWS_AS(closed_form_coefficients(bad), DomainError);
}

TEST_CASE("analytic state solves the generator") {
    for (Scenario s : {Scenario::Sequential, Scenario::Collective})
        for (double chi : {-1.0, 0.0, 0.6}) {
            const auto b = discordant(chi, s, 0.4);
            const double h = 1e-4;
            for (double t : {0.0, 3.0, 20.0}) {
                const Matrix rho = analytic_state(t, 1.0, b).matrix();
                const Matrix dot = (analytic_state(t + h, 1.0, b).matrix() -
                                    analytic_state(t - (t > 0 ? h : 0), 1.0, b).matrix()) /
                                   (t > 0 ? 2 * h : h);
                CHECK((dot - generator_apply(rho, b)).norm() < (t > 0 ? 1e-8 : 1e-5));
            }
        }
}

TEST_CASE("Lindblad form reproduces the collision generator") {
    const Matrix rho = coherent_state();
    for (auto kind : {ProjectileKind::Classical, ProjectileKind::Discordant, ProjectileKind::Entangled,
                      ProjectileKind::Product})
        for (Scenario s : {Scenario::Sequential, Scenario::Collective})
            for (double jt : {0.05, 0.8, 2.4}) {
                BathParams b = discordant(0.0, s, jt);
                b.kind = kind;
                b.coherence = 0.7 * coherence_bounds(kind, b.beta_b, b.qubit).upper;
                b.rate = 1.3;
                const auto r = lindblad_rates(b);
                CHECK((lindblad_apply(rho, r) - generator_apply(rho, b)).cwiseAbs().maxCoeff() < 1e-12);
                CHECK((heat_dissipator_apply(rho, r) + dephasing_dissipator_apply(rho, r) - lindblad_apply(rho, r))
                          .norm() < 1e-15);
            }
}

TEST_CASE("lambda-independent rates") {
    const auto k0 = lindblad_rates(discordant(0.0));
    CHECK(k0.kappa_1 == doctest::Approx(0.8807970779778823 * 0.01986702171473694));
    const auto k = lindblad_rates(discordant(1.0));
    CHECK(k.kappa_1 + k.kappa_2 == doctest::Approx(0.02403884139697604));
    CHECK(k.kappa_2 == doctest::Approx(0.004454116881393056).epsilon(1e-10));
}

TEST_CASE("RK4 integration") {
    const auto b = discordant(0.8, Scenario::Sequential, 0.9);
    const std::array<BathParams, 1> one{b};
    const std::vector<double> grid{0.0, 1.0, 5.0, 40.0};
    const auto traj = integrate_master_equation(thermal_qubit(0.7, b.qubit), one, grid);
    for (std::size_t k = 0; k < grid.size(); ++k)
        CHECK(traj.states[k].population(1) ==
              doctest::Approx(analytic_state(grid[k], 0.7, b).population(1)).epsilon(1e-10));
    const std::vector<double> bad{1.0, 2.0};
    CHECK_THROWS_AS(integrate_master_equation(thermal_qubit(0.7, b.qubit), one, bad), ArgumentError);
}

TEST_CASE("stochastic ensemble is reproducible across thread counts") {
    const auto b = discordant(1.0, Scenario::Collective, 0.6);
    const std::vector<double> grid{0.0, 0.5, 2.0, 6.0};
    const auto rho0 = thermal_qubit(1.0, b.qubit);
    const auto a = stochastic_trajectories(rho0, b, grid, 400, 99, 1);
    const auto c = stochastic_trajectories(rho0, b, grid, 400, 99, 3);
    CHECK(a.mean_excited_population == c.mean_excited_population);
    CHECK(a.std_error == c.std_error);
    const auto d = stochastic_trajectories(rho0, b, grid, 400, 100, 1);
    CHECK(a.mean_excited_population != d.mean_excited_population);
    CHECK_THROWS_AS(stochastic_trajectories(rho0, b, grid, 0, 1, 1), ArgumentError);
}

TEST_CASE("intra-collision snapshots") {
    const auto b = discordant(1.0);
    const std::vector<double> times{0.0, 5.0, 10.0};
    const auto snaps = intra_collision_snapshots(thermal_qubit(4.0, b.qubit), projectile_state(b),
                                                 Scenario::Collective, 0.05, times);
    REQUIRE(snaps.size() == 3);
    CHECK(snaps[0].b1b2_exchange_coherence == doctest::Approx(b.coherence));
    for (const auto& s : snaps) {
        CHECK(s.sb_max_real_offdiag < 1e-12);
        CHECK(s.b1b2_max_imag < 1e-12);
        CHECK(s.local_offdiag_residual < 1e-12);
    }
    CHECK(std::abs(snaps[1].sb1_upper.imag()) > 0.0);
    CHECK_THROWS_AS(intra_collision_snapshots(thermal_qubit(4.0, b.qubit), projectile_state(b),
                                              Scenario::Sequential, 0.05, times),
                    ArgumentError);
}

TEST_CASE("four-qubit block") {
    BathParams e = discordant(0.0, Scenario::Collective, 0.2);
    e.kind = ProjectileKind::Entangled;
    e.coherence = 0.0;
    const auto r = extended_block_rates(e);
    const double t_inf = 1.0 / std::log(r.emission / r.absorption);
    CHECK(t_inf == doctest::Approx(0.50094).epsilon(1e-4));
    e.coherence = 0.1 * coherence_bounds(e.kind, e.beta_b, e.qubit).upper;
    const auto r2 = extended_block_rates(e);
    CHECK(1.0 / std::log(r2.emission / r2.absorption) < t_inf);
}
