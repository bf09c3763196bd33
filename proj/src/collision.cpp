// collision.cpp: Exchange interaction and collision unitaries

#include "qrayleigh/collision.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "qrayleigh/errors.hpp"

namespace qrayleigh::collision {

namespace {

void check_tau(double tau) {
    if (!(tau >= 0.0)) throw ArgumentError("collision duration must be non-negative");
}

} // namespace

HermitianOperator pair_interaction_hamiltonian(double coupling, std::size_t i, std::size_t j,
                                               std::size_t n_qubits) {
    if (n_qubits < 2 || n_qubits > qmath::kMaxQubits)
        throw ArgumentError("pair interaction needs 2..5 qubits");
    if (i == j || i >= n_qubits || j >= n_qubits)
        throw ArgumentError("pair interaction needs two distinct in-range qubit indices");
    const Matrix xx = qmath::embed(qmath::pauli_x(), i, n_qubits) * qmath::embed(qmath::pauli_x(), j, n_qubits);
    const Matrix yy = qmath::embed(qmath::pauli_y(), i, n_qubits) * qmath::embed(qmath::pauli_y(), j, n_qubits);
    return HermitianOperator(coupling * (xx + yy));
}

HermitianOperator star_interaction_hamiltonian(double coupling, std::size_t n_qubits) {
    HermitianOperator h = pair_interaction_hamiltonian(coupling, 0, 1, n_qubits);
    for (std::size_t k = 2; k < n_qubits; ++k) h = h + pair_interaction_hamiltonian(coupling, 0, k, n_qubits);
    return h;
}

Matrix total_free_hamiltonian(const QubitSpec& spec, std::size_t n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Matrix h = Matrix::Zero(dim, dim);
    for (std::size_t k = 0; k < n_qubits; ++k) h += qmath::embed(spec.hamiltonian(), k, n_qubits);
    return h;
}

CollisionUnitary sequential_unitary(double coupling, double tau, SequentialOrder order) {
    check_tau(tau);
    const Matrix u1 = qmath::unitary_from_hamiltonian(pair_interaction_hamiltonian(coupling, 0, 1, 3), 0.5 * tau);
    const Matrix u2 = qmath::unitary_from_hamiltonian(pair_interaction_hamiltonian(coupling, 0, 2, 3), 0.5 * tau);
    Matrix u = order == SequentialOrder::AsWritten ? Matrix(u1 * u2) : Matrix(u2 * u1);
    return {CollisionScenario::Sequential, coupling, tau, std::move(u)};
}

CollisionUnitary collective_unitary(double coupling, double tau) {
    check_tau(tau);
    return {CollisionScenario::Collective, coupling, tau,
            qmath::unitary_from_hamiltonian(star_interaction_hamiltonian(coupling, 3), tau)};
}

CollisionUnitary extended_collective_unitary(double coupling, double tau) {
    check_tau(tau);
    return {CollisionScenario::ExtendedCollective, coupling, tau,
            qmath::unitary_from_hamiltonian(star_interaction_hamiltonian(coupling, 5), tau)};
}

std::shared_ptr<const CollisionUnitary> cached_unitary(Scenario scenario, double coupling, double tau) {
    using Key = std::tuple<int, double, double>;
    static std::shared_mutex mutex;
    static std::map<Key, std::shared_ptr<const CollisionUnitary>> cache;

    const Key key{static_cast<int>(scenario), coupling, tau};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto u = std::make_shared<const CollisionUnitary>(
        scenario == Scenario::Sequential ? sequential_unitary(coupling, tau) : collective_unitary(coupling, tau));
    std::unique_lock lock(mutex);
    // Sweeps touch a bounded set of (J, tau); cap the cache anyway.
    if (cache.size() > 4096) cache.clear();
    return cache.try_emplace(key, std::move(u)).first->second;
}

Matrix collide(const Matrix& rho_s, const Matrix& rho_b, const Matrix& u) {
    if (rho_s.rows() * rho_b.rows() != u.rows())
        throw DimensionError("collision unitary does not match the joint state dimension");
    const Matrix joint = qmath::tensor_product(rho_s, rho_b);
    const Matrix out = u * joint * u.adjoint();
    const std::size_t n = qmath::qubit_count(u.rows());
    const std::size_t ns = qmath::qubit_count(rho_s.rows());
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < ns; ++k) keep.push_back(k);
    return qmath::partial_trace(out, n, keep);
}

DensityMatrix single_collision_map(const DensityMatrix& rho_s, const DensityMatrix& rho_b,
                                   const CollisionUnitary& u) {
    return DensityMatrix(collide(rho_s.matrix(), rho_b.matrix(), u.matrix));
}

} // namespace qrayleigh::collision
