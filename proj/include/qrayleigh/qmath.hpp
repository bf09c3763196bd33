// qmath.hpp: Dense complex linear algebra for 1-5 qubit Hilbert spaces

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qrayleigh {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

} // namespace qrayleigh

namespace qrayleigh::qmath {

inline constexpr double kTraceTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr std::size_t kMaxQubits = 5;

// Number of qubits for a 2^n dimension; throws DimensionError otherwise.
std::size_t qubit_count(Eigen::Index dim);

// Max-norm of (m - m^dagger).
double hermiticity_deviation(const Matrix& m);

/// A Hermitian matrix, checked on construction.
class HermitianOperator {
public:
    explicit HermitianOperator(Matrix m, double tol = kHermitianTol);

    const Matrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

    HermitianOperator operator+(const HermitianOperator& other) const;
    HermitianOperator operator*(double s) const;

private:
    Matrix m_;
};

/// A qubit-register density matrix with validated trace, Hermiticity and
/// positivity. Subsystem order is left-most qubit = most significant index.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix m);

    // Skips the eigenvalue check; the caller vouches for the invariants.
    static DensityMatrix trusted(Matrix m);

    const Matrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    std::size_t n_qubits() const { return n_qubits_; }
    std::vector<int> qubit_dims() const { return std::vector<int>(n_qubits_, 2); }

    cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
    double population(Eigen::Index i) const { return m_(i, i).real(); }

private:
    struct TrustedTag {};
    DensityMatrix(Matrix m, TrustedTag);

    Matrix m_;
    std::size_t n_qubits_{0};
};

struct ValidationReport {
    double tol{0.0};
    double trace_deviation{0.0};
    double hermiticity_deviation{0.0};
    double min_eigenvalue{0.0};
    bool trace_ok{false};
    bool hermitian_ok{false};
    bool positive_ok{false};

    bool ok() const { return trace_ok && hermitian_ok && positive_ok; }
};

ValidationReport validate_density_matrix(const Matrix& rho, double tol);

Matrix tensor_product(const Matrix& a, const Matrix& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

// Reduced state over the qubits listed in `keep` (order of the result follows
// ascending qubit index).
Matrix partial_trace(const Matrix& rho, std::size_t n_qubits, std::vector<std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

// exp(-i t h) through the Hermitian eigendecomposition of h.
Matrix unitary_from_hamiltonian(const HermitianOperator& h, double t);

// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const Matrix& m);

// Max-norm of U U^dagger - I.
double unitarity_deviation(const Matrix& u);

Matrix identity(Eigen::Index dim);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// Single-qubit operator acting on `site` of an n-qubit register.
Matrix embed(const Matrix& single, std::size_t site, std::size_t n_qubits);

// Copy of an n-qubit operator keeping only elements between basis states
// with equal excitation number.
Matrix excitation_block_part(const Matrix& m);

// e^{i H t} m e^{-i H t} for H = gap * (excitation number).
Matrix free_rotation(const Matrix& m, double gap, double t);

// Basis index of a computational-basis string such as "geg" (g -> 0, e -> 1).
Eigen::Index basis_index(const char* label);

} // namespace qrayleigh::qmath
