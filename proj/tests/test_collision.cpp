#include "doctest.h"

#include <cmath>

#include "qrayleigh/collision.hpp"
#include "qrayleigh/errors.hpp"
#include "qrayleigh/qmath.hpp"

using namespace qrayleigh;
using namespace qrayleigh::collision;

TEST_CASE("collision unitaries are unitary and conserve excitations") {
    for (double jt : {0.0, 0.05, 0.7, 2.1}) {
        const auto seq = sequential_unitary(jt, 1.0);
        const auto col = collective_unitary(jt, 1.0);
        CHECK(qmath::unitarity_deviation(seq.matrix) < 1e-13);
        CHECK(qmath::unitarity_deviation(col.matrix) < 1e-13);
        const Matrix n = total_free_hamiltonian(QubitSpec{0.0, 1.0}, 3);
        CHECK((col.matrix * n - n * col.matrix).norm() < 1e-13);
        CHECK((seq.matrix * n - n * seq.matrix).norm() < 1e-13);
    }
    CHECK((collective_unitary(0.3, 0.0).matrix - Matrix::Identity(8, 8)).norm() < 1e-13);
    CHECK_THROWS_AS(collective_unitary(0.3, -1.0), ArgumentError);
    CHECK(extended_collective_unitary(0.2, 1.0).n_qubits() == 5);
}

TEST_CASE("pair and star Hamiltonians") {
    const auto h = pair_interaction_hamiltonian(0.5, 0, 1, 2);
    // J (xx + yy) = 2 J (|ge><eg| + h.c.)
    CHECK(h.matrix()(1, 2).real() == doctest::Approx(1.0));
    CHECK(h.matrix()(0, 0).real() == doctest::Approx(0.0));
    const auto star = star_interaction_hamiltonian(0.5, 3);
    const Matrix sum = pair_interaction_hamiltonian(0.5, 0, 1, 3).matrix() +
                       pair_interaction_hamiltonian(0.5, 0, 2, 3).matrix();
    CHECK((star.matrix() - sum).norm() < 1e-15);
}

TEST_CASE("single-photon exchange in a collective collision") {
    // |e,gg> couples to the symmetric state with frequency 2 sqrt2 J.
    const double jt = 0.3;
    const auto u = collective_unitary(jt, 1.0);
    const auto egg = qmath::basis_index("egg");
    CHECK(std::abs(u.matrix(egg, egg)) == doctest::Approx(std::abs(std::cos(2.0 * std::sqrt(2.0) * jt))));
}

TEST_CASE("cached unitaries are shared") {
    const auto a = cached_unitary(Scenario::Collective, 0.05, 1.0);
    const auto b = cached_unitary(Scenario::Collective, 0.05, 1.0);
    CHECK(a.get() == b.get());
    CHECK(cached_unitary(Scenario::Sequential, 0.05, 1.0).get() != a.get());
}

TEST_CASE("collision map validates shapes") {
    const auto u = collective_unitary(0.1, 1.0);
    const auto rho_s = thermal_qubit(1.0, QubitSpec{});
    BathParams b;
    const auto rho_b = projectile_state(b);
    const auto out = single_collision_map(rho_s, rho_b, u);
    CHECK(out.dim() == 2);
    CHECK_THROWS_AS(single_collision_map(rho_b, rho_b, u), DimensionError);
}
