#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qrayleigh/errors.hpp"
#include "qrayleigh/measures.hpp"
#include "qrayleigh/states.hpp"

using namespace qrayleigh;
using namespace qrayleigh::measures;

namespace {

DensityMatrix bath(ProjectileKind kind, double chi) {
    BathParams b;
    b.kind = kind;
    b.beta_b = 2.0;
    b.coherence = chi * coherence_bounds(kind, 2.0, b.qubit).upper;
    return projectile_state(b);
}

// Brute-force classical correlations: fine theta grid, coarse phi grid.
double grid_classical(const DensityMatrix& rho) {
    Matrix ra = Matrix::Zero(2, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int j = 0; j < 2; ++j) ra(a, b) += rho(2 * a + j, 2 * b + j);
    double best = 1e9;
    for (int i = 0; i <= 2000; ++i)
        for (int k = 0; k < 8; ++k)
            best = std::min(best, measured_conditional_entropy(rho.matrix(), std::numbers::pi * i / 2000.0,
                                                               2.0 * std::numbers::pi * k / 8.0));
    return von_neumann_entropy(DensityMatrix(ra)) - best;
}

} // namespace

TEST_CASE("entropy and coherence oracles") {
    const auto c = bath(ProjectileKind::Classical, 0.0);
    CHECK(von_neumann_entropy(c) == doctest::Approx(0.3653338550872077).epsilon(1e-12));
    CHECK(l1_coherence(bath(ProjectileKind::Discordant, 1.0)) == doctest::Approx(0.20998717080701298));
    CHECK(l1_coherence(bath(ProjectileKind::Entangled, 1.0)) == doctest::Approx(0.6480542736638854));
    CHECK(rel_entropy_coherence(bath(ProjectileKind::Discordant, 1.0)) ==
          doctest::Approx(0.1455520153986407).epsilon(1e-10));
    CHECK(rel_entropy_coherence(c) == doctest::Approx(0.0));
}

TEST_CASE("entanglement of formation") {
    const auto e = bath(ProjectileKind::Entangled, 1.0);
    CHECK(concurrence(e) == doctest::Approx(0.6480542662133048).epsilon(1e-8));
    CHECK(entanglement_of_formation(e, LogUnit::Bits) == doctest::Approx(0.5270653318567146).epsilon(1e-8));
    CHECK(entanglement_of_formation(e, LogUnit::Nats) ==
          doctest::Approx(0.5270653318567146 * std::numbers::ln2).epsilon(1e-8));
    CHECK(concurrence(bath(ProjectileKind::Discordant, 1.0)) == 0.0);
    CHECK(concurrence(bath(ProjectileKind::Classical, 0.0)) == doctest::Approx(0.0));
}

TEST_CASE("discord against a brute-force grid") {
    for (double chi : {-1.0, -0.4, 0.3, 1.0}) {
        const auto rho = bath(ProjectileKind::Discordant, chi);
        const auto cc = classical_correlations(rho);
        REQUIRE(cc.optimizer.has_value());
        CHECK(cc.value == doctest::Approx(grid_classical(rho)).epsilon(1e-6));
    }
    const auto d = quantum_discord(bath(ProjectileKind::Discordant, 1.0));
    CHECK(d.value == doctest::Approx(0.11613662884825798).epsilon(1e-6));
    CHECK(quantum_discord(bath(ProjectileKind::Classical, 0.0)).value == doctest::Approx(0.0));
    CHECK(quantum_discord(bath(ProjectileKind::Discordant, 0.0)).value == doctest::Approx(0.0));

    const auto e = bath(ProjectileKind::Entangled, 1.0);
    CHECK(quantum_discord(e).value == doctest::Approx(0.3653338550872073).epsilon(1e-6));
    CHECK(mutual_information(e) == doctest::Approx(0.7306677101744153).epsilon(1e-10));
}

TEST_CASE("log units") {
    CHECK(convert(std::numbers::ln2, LogUnit::Bits) == doctest::Approx(1.0));
    CHECK(parse_log_unit("bits") == LogUnit::Bits);
    CHECK_THROWS(parse_log_unit("bans"));
}
