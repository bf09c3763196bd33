#include "doctest.h"

#include "qrayleigh/errors.hpp"
#include "qrayleigh/qmath.hpp"

using namespace qrayleigh;
using namespace qrayleigh::qmath;

namespace {

Matrix diag2(double a, double b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

} // namespace

TEST_CASE("density matrix validation") {
    CHECK_NOTHROW(DensityMatrix(diag2(0.3, 0.7)));
    CHECK_THROWS_AS(DensityMatrix(diag2(0.3, 0.6)), ValidationError);
    CHECK_THROWS_AS(DensityMatrix(diag2(1.2, -0.2)), ValidationError);
    Matrix bad = diag2(0.5, 0.5);
    bad(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix{bad}, ValidationError);
    CHECK_THROWS_AS(DensityMatrix(Matrix::Identity(3, 3) / 3.0), DimensionError);

    const auto rep = validate_density_matrix(diag2(0.5, 0.5), 1e-12);
    CHECK(rep.ok());
    CHECK(rep.min_eigenvalue == doctest::Approx(0.5));
}

TEST_CASE("tensor product and partial trace round trip") {
    const DensityMatrix a(diag2(0.25, 0.75));
    Matrix bm = diag2(0.6, 0.4);
    bm(0, 1) = cplx(0.1, 0.2);
    bm(1, 0) = cplx(0.1, -0.2);
    const DensityMatrix b(bm);
    const auto ab = tensor_product(a, b);
    CHECK(ab.n_qubits() == 2);
    CHECK((partial_trace(ab, {0}).matrix() - a.matrix()).norm() < 1e-15);
    CHECK((partial_trace(ab, {1}).matrix() - b.matrix()).norm() < 1e-15);
    CHECK_THROWS_AS(partial_trace(ab, {}), ArgumentError);

    // Left-most qubit is the most significant index.
    CHECK(ab(basis_index("eg"), basis_index("eg")).real() == doctest::Approx(0.75 * 0.6));
    CHECK(basis_index("geg") == 2);
}

TEST_CASE("unitaries from Hermitian generators") {
    const HermitianOperator h(pauli_x() * 0.3);
    const Matrix u = unitary_from_hamiltonian(h, 2.0);
    CHECK(unitarity_deviation(u) < 1e-14);
    CHECK(std::abs(u(0, 0) - std::cos(0.6)) < 1e-14);
    CHECK(std::abs(u(0, 1) - cplx(0.0, -std::sin(0.6))) < 1e-14);
    CHECK_THROWS_AS(HermitianOperator(pauli_y() * cplx(0, 1)), ValidationError);
}

TEST_CASE("excitation blocks and free phases") {
    Matrix m = Matrix::Ones(4, 4);
    const Matrix block = excitation_block_part(m);
    CHECK(block(1, 2) == cplx(1.0));
    CHECK(block(0, 3) == cplx(0.0));
    CHECK(block(0, 1) == cplx(0.0));
    const Matrix rot = free_rotation(m, 1.5, 2.0);
    CHECK(std::abs(rot(1, 2) - 1.0) < 1e-15);
    CHECK(std::abs(rot(3, 0) - std::polar(1.0, 2 * 1.5 * 2.0)) < 1e-14);
}

TEST_CASE("embedding single-qubit operators") {
    const Matrix z1 = embed(pauli_z(), 1, 3);
    CHECK(z1.rows() == 8);
    CHECK(z1(basis_index("geg"), basis_index("geg")).real() == doctest::Approx(-1.0));
    CHECK(z1(basis_index("egg"), basis_index("egg")).real() == doctest::Approx(1.0));
}
