#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "qrayleigh/dynamics.hpp"
#include "qrayleigh/errors.hpp"
#include "qrayleigh/thermo.hpp"

using namespace qrayleigh;
using namespace qrayleigh::thermo;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

BathParams discordant(double chi, Scenario s = Scenario::Collective, double jt = 0.05, double beta = 2.0) {
    BathParams b;
    b.kind = ProjectileKind::Discordant;
    b.beta_b = beta;
    b.scenario = s;
    b.coupling = jt;
    b.tau = 1.0;
    b.coherence = chi * coherence_bounds(b.kind, b.beta_b, b.qubit).upper;
    return b;
}

} // namespace

TEST_CASE("temperatures") {
    const QubitSpec q{1.0, 2.0};
    CHECK(temperature_of(thermal_qubit(2.0, q), q) == doctest::Approx(0.5));
    Matrix half = Matrix::Identity(2, 2) * 0.5;
    CHECK(temperature_of(DensityMatrix(half), q) == kInf);
    CHECK(inverse_temperature_of(DensityMatrix(half), q) == 0.0);
    Matrix pure = Matrix::Zero(2, 2);
    pure(0, 0) = 1.0;
    CHECK_THROWS_AS(temperature_of(DensityMatrix(pure), q), UndefinedTemperatureError);

    CHECK(steady_temperature(discordant(0.0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(steady_temperature(discordant(1.0)) == doctest::Approx(0.6752554247395864).epsilon(1e-12));
    CHECK(steady_temperature(discordant(-1.0)) < 0.5);
    CHECK(temperature_of(dynamics::analytic_state(kInf, 2.0, discordant(1.0)), q) ==
          doctest::Approx(0.6752554247395864).epsilon(1e-12));
}

TEST_CASE("heat current oracles") {
    CHECK(heat_current(0.0, 1.0 / 0.6, discordant(0.0)) == doctest::Approx(-7.880489161968818e-4).epsilon(1e-10));
    CHECK(heat_current(0.0, 1.0 / 0.6, discordant(0.0, Scenario::Sequential)) ==
          doctest::Approx(-1.979181928511431e-4).epsilon(1e-10));
    CHECK(heat_current(0.0, 2.0, discordant(0.0)) == 0.0);
    CHECK(heat_current(17.0, 2.0, discordant(0.0)) == 0.0);
    CHECK_THROWS_AS(heat_current(-1.0, 2.0, discordant(0.0)), ArgumentError);

    const auto a = anomalous_heat_current(0.0, discordant(1.0));
    CHECK(a.applicable);
    CHECK(a.value == doctest::Approx(1.5886167448468935e-3).epsilon(1e-10));
    CHECK(anomalous_heat_current(0.0, discordant(-1.0)).value < 0.0);
    BathParams c = discordant(0.0);
    c.kind = ProjectileKind::Classical;
    CHECK_FALSE(anomalous_heat_current(0.0, c).applicable);
    CHECK(anomalous_heat_current(0.0, c).value == 0.0);

    // Negative alpha flips the sign.
    CHECK(anomalous_heat_current(0.0, discordant(1.0, Scenario::Sequential, 2.0)).value < 0.0);
}

TEST_CASE("heat current matches the generator") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const auto b = discordant(u(rng), i % 2 ? Scenario::Sequential : Scenario::Collective, 0.6 + 0.5 * u(rng));
        const double beta0 = 1.5 + u(rng);
        const double t = 4.0 * (1.0 + u(rng));
        const Matrix rho = dynamics::analytic_state(t, beta0, b).matrix();
        const double exact = (b.qubit.hamiltonian() * dynamics::generator_apply(rho, b)).trace().real();
        CHECK(std::abs(exact - heat_current(t, beta0, b)) < 1e-12);
    }
}

TEST_CASE("heat-flow inhibition") {
    for (double chi : {-0.9, 0.3, 1.0}) {
        const auto b = discordant(chi);
        const double beta0 = steady_inverse_temperature(b);
        CHECK(std::abs(heat_current(0.0, beta0, b)) < 1e-16);
        CHECK(std::abs(beta0 - 2.0) > 0.0);
    }
}

TEST_CASE("entropy production") {
    const auto b = discordant(1.0);
    const auto ep = entropy_production(5.0, 2.0, b);
    CHECK(ep.production > 0.0);
    CHECK(ep.production == doctest::Approx(ep.entropy_rate + ep.entropy_flux));
    CHECK(entropy_production(kInf, 2.0, b).production == 0.0);

    // Closed form against -d/dt S(rho || rho_inf).
    const double t = 12.0;
    const Matrix rho = dynamics::analytic_state(t, 1.2, b).matrix();
    const Matrix dot = dynamics::generator_apply(rho, b);
    const Matrix inf = dynamics::analytic_state(kInf, 1.2, b).matrix();
    const auto direct = entropy_production_from(rho, dot, inf);
    const auto closed = entropy_production(t, 1.2, b);
    CHECK(direct.production == doctest::Approx(closed.production).epsilon(1e-10));
    CHECK(direct.entropy_flux == doctest::Approx(closed.entropy_flux).epsilon(1e-10));
}

TEST_CASE("coherence current") {
    const auto b = discordant(1.0);
    CHECK(coherence_current(0.0, 2.0, discordant(0.0)) == 0.0);
    const double jc = coherence_current(0.0, 2.0, b);
    const auto l = onsager_coefficients(b, 2.0);
    CHECK(std::abs(jc) == doctest::Approx(l.l_cc * 2.0 * std::abs(l.delta_c)));
    CHECK(jc * heat_current(0.0, 2.0, b) < 0.0);
    CHECK_THROWS_AS(coherence_current(0.0, 2.0, b, true), ArgumentError);
    CHECK_NOTHROW(coherence_current(0.0, 0.05, discordant(0.5, Scenario::Collective, 0.05, 0.05), true));
}

TEST_CASE("Onsager coefficients") {
    const auto col = onsager_coefficients(discordant(0.0), 2.0);
    CHECK(col.l_hh == doctest::Approx(4.966755428684235e-3).epsilon(1e-10));
    CHECK(col.l_hc == col.l_ch);
    CHECK(col.l_cc == col.l_hh);
    const auto seq = onsager_coefficients(discordant(0.0, Scenario::Sequential), 2.0);
    CHECK(seq.l_hh == doctest::Approx(1.2473987827079777e-3).epsilon(1e-10));
    CHECK(onsager_coefficients(discordant(1.0), 1.5).delta_c == doctest::Approx(-2.0 * 0.10499358540350649));

    const auto two = onsager_coefficients(discordant(0.3), discordant(0.0, Scenario::Collective, 0.05, 2.5));
    CHECK(two.l_hh == doctest::Approx(col.l_hh / 2.0));
    CHECK(two.delta_beta == doctest::Approx(0.5));
    CHECK(two.regime == OnsagerRegime::TwoBathSteadyHighT);
    CHECK_THROWS_AS(onsager_coefficients(discordant(0.0), discordant(0.0, Scenario::Sequential)),
                    UnsupportedConfigurationError);
}

TEST_CASE("numeric Onsager extraction") {
    const auto hot = discordant(0.0, Scenario::Collective, 0.05, 0.05);
    const auto n = extract_onsager_numeric(hot, 5e-6, 1e-4);
    const auto c = onsager_coefficients(hot, hot.beta_b);
    CHECK(n.matrix.l_hh == doctest::Approx(c.l_hh).epsilon(0.02));
    CHECK(n.matrix.l_cc == doctest::Approx(c.l_cc).epsilon(0.02));
    CHECK(std::abs(n.matrix.l_hc - n.matrix.l_ch) / n.matrix.l_hc < 0.02);
    CHECK_FALSE(n.nonlinear_regime);

    const auto cold = discordant(0.0, Scenario::Collective, 0.05, 1.0);
    const auto m = extract_onsager_numeric(cold, 1e-4, 1e-4);
    CHECK(m.nonlinear_regime);
    CHECK(m.nonlinearity > 0.05);
    BathParams e = cold;
    e.kind = ProjectileKind::Entangled;
    CHECK_THROWS_AS(extract_onsager_numeric(e, 1e-4, 1e-4), ArgumentError);
}

TEST_CASE("two-bath steady state") {
    const auto sym = two_bath_steady(discordant(0.5), discordant(0.5));
    CHECK(std::abs(sym.j_h_bath1) < 1e-15);
    CHECK(std::abs(sym.j_c) < 1e-15);
    CHECK(sym.beta_infinity == doctest::Approx(steady_inverse_temperature(discordant(0.5))).epsilon(1e-12));

    const auto peltier = two_bath_steady(discordant(1.0), discordant(0.0));
    CHECK(std::abs(peltier.j_h_bath1 + peltier.j_h_bath2) < 1e-13);
    CHECK(std::abs(peltier.j_h_bath1) > 1e-4);
    CHECK(peltier.pi > 0.0);

    const auto seebeck = two_bath_steady(discordant(0.0), discordant(0.0, Scenario::Collective, 0.05, 2.1));
    CHECK(seebeck.j_h_bath1 > 0.0);
    CHECK(seebeck.j_c != 0.0);

    // High-temperature closed forms against the exact balance.
    const auto a = discordant(0.6, Scenario::Collective, 0.05, 0.05);
    const auto b = discordant(-0.2, Scenario::Collective, 0.05, 0.052);
    const auto hot = two_bath_steady(a, b);
    CHECK(hot.beta_infinity == doctest::Approx(hot.beta_infinity_formula).epsilon(1e-2));
    CHECK(two_bath_heat_current_linear(a, b) == doctest::Approx(hot.j_h_bath1).epsilon(2e-2));

    BathParams c = discordant(0.0);
    c.kind = ProjectileKind::Classical;
    CHECK_THROWS_AS(two_bath_steady(c, discordant(0.0)), UnsupportedConfigurationError);
}
