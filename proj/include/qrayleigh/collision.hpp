// collision.hpp: Exchange interaction and the sequential, collective and
// extended-block collision unitaries

#pragma once

#include <memory>

#include "qrayleigh/qmath.hpp"
#include "qrayleigh/states.hpp"

namespace qrayleigh::collision {

using qmath::DensityMatrix;
using qmath::HermitianOperator;

enum class CollisionScenario { Sequential, Collective, ExtendedCollective };

// AsWritten multiplies U_{SB1}(tau/2) U_{SB2}(tau/2), so the B2 half acts first.
enum class SequentialOrder { AsWritten, Reversed };

struct CollisionUnitary {
    CollisionScenario scenario{CollisionScenario::Collective};
    double coupling{0.0};
    double tau{0.0};
    Matrix matrix;

    std::size_t n_qubits() const { return qmath::qubit_count(matrix.rows()); }
};

// J (sx_i sx_j + sy_i sy_j) on an n-qubit register.
HermitianOperator pair_interaction_hamiltonian(double coupling, std::size_t i, std::size_t j,
                                               std::size_t n_qubits);

// Sum of the target-qubit (index 0) exchange terms with every other qubit.
HermitianOperator star_interaction_hamiltonian(double coupling, std::size_t n_qubits);

// Free Hamiltonian sum_k H_S^(k) for identical qubits.
Matrix total_free_hamiltonian(const QubitSpec& spec, std::size_t n_qubits);

CollisionUnitary sequential_unitary(double coupling, double tau,
                                    SequentialOrder order = SequentialOrder::AsWritten);
CollisionUnitary collective_unitary(double coupling, double tau);
CollisionUnitary extended_collective_unitary(double coupling, double tau);

// Memoised unitary for a single-pair scenario; safe for concurrent callers.
std::shared_ptr<const CollisionUnitary> cached_unitary(Scenario scenario, double coupling, double tau);

// tr_B[U (rho_S x rho_B) U^dagger].
Matrix collide(const Matrix& rho_s, const Matrix& rho_b, const Matrix& u);
DensityMatrix single_collision_map(const DensityMatrix& rho_s, const DensityMatrix& rho_b,
                                   const CollisionUnitary& u);

} // namespace qrayleigh::collision
