// qmath.cpp: Dense complex linear algebra for 1-5 qubit Hilbert spaces

#include "qrayleigh/qmath.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qrayleigh/errors.hpp"

namespace qrayleigh::qmath {

std::size_t qubit_count(Eigen::Index dim) {
    if (dim < 2)
        throw DimensionError("dimension must be a power of two >= 2, got " + std::to_string(dim));
    std::size_t n = 0;
    Eigen::Index d = dim;
    while (d > 1) {
        if (d % 2 != 0)
            throw DimensionError("dimension is not a power of two: " + std::to_string(dim));
        d /= 2;
        ++n;
    }
    if (n > kMaxQubits)
        throw DimensionError("at most 5 qubits are supported, got " + std::to_string(n));
    return n;
}

double hermiticity_deviation(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("matrix is not square");
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(Matrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionError("Hermitian operator must be square");
    const double dev = hermiticity_deviation(m_);
    if (dev > tol)
        throw ValidationError("operator is not Hermitian (deviation " + std::to_string(dev) + ")");
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
    if (dim() != other.dim()) throw DimensionError("operator dimensions differ");
    return HermitianOperator(m_ + other.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const { return HermitianOperator(m_ * s); }

RealVector hermitian_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

ValidationReport validate_density_matrix(const Matrix& rho, double tol) {
    ValidationReport r;
    r.tol = tol;
    if (rho.rows() != rho.cols() || rho.rows() == 0) return r;
    r.trace_deviation = std::abs(rho.trace() - cplx(1.0, 0.0));
    r.hermiticity_deviation = hermiticity_deviation(rho);
    // Eigenvalues of the Hermitian part; a non-Hermitian input already fails.
    const Matrix herm = 0.5 * (rho + rho.adjoint());
    r.min_eigenvalue = hermitian_eigenvalues(herm).minCoeff();
    r.trace_ok = r.trace_deviation <= tol;
    r.hermitian_ok = r.hermiticity_deviation <= tol;
    r.positive_ok = r.min_eigenvalue >= -tol;
    return r;
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionError("density matrix must be square");
    n_qubits_ = qubit_count(m_.rows());
    const double trace_dev = std::abs(m_.trace() - cplx(1.0, 0.0));
    if (trace_dev > kTraceTol)
        throw ValidationError("trace deviates from 1 by " + std::to_string(trace_dev));
    const double herm_dev = hermiticity_deviation(m_);
    if (herm_dev > kHermitianTol)
        throw ValidationError("density matrix not Hermitian (deviation " + std::to_string(herm_dev) + ")");
    const double min_eig = hermitian_eigenvalues(m_).minCoeff();
    if (min_eig < -kPositivityTol)
        throw ValidationError("density matrix not positive (min eigenvalue " + std::to_string(min_eig) + ")");
}

DensityMatrix::DensityMatrix(Matrix m, TrustedTag) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionError("density matrix must be square");
    n_qubits_ = qubit_count(m_.rows());
}

DensityMatrix DensityMatrix::trusted(Matrix m) { return DensityMatrix(std::move(m), TrustedTag{}); }

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw DimensionError("tensor_product expects square matrices");
    const Eigen::Index na = a.rows(), nb = b.rows();
    Matrix out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i)
        for (Eigen::Index j = 0; j < na; ++j)
            out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
    return out;
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix::trusted(tensor_product(a.matrix(), b.matrix()));
}

Matrix partial_trace(const Matrix& rho, std::size_t n_qubits, std::vector<std::size_t> keep) {
    if (rho.rows() != rho.cols()) throw DimensionError("partial_trace expects a square matrix");
    if (rho.rows() != (Eigen::Index{1} << n_qubits))
        throw DimensionError("matrix dimension does not match qubit count");
    if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (auto k : keep)
        if (k >= n_qubits) throw ArgumentError("partial_trace: qubit index out of range");

    // Bit position of qubit q (qubit 0 is the most significant bit).
    auto bit = [n_qubits](std::size_t q) { return n_qubits - 1 - q; };
    Eigen::Index keep_mask = 0;
    for (auto k : keep) keep_mask |= Eigen::Index{1} << bit(k);

    auto reduced_index = [&](Eigen::Index full) {
        Eigen::Index r = 0;
        for (auto k : keep) r = (r << 1) | ((full >> bit(k)) & 1);
        return r;
    };

    const Eigen::Index dim_keep = Eigen::Index{1} << keep.size();
    Matrix out = Matrix::Zero(dim_keep, dim_keep);
    const Eigen::Index dim = rho.rows();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Eigen::Index ri = reduced_index(i);
        for (Eigen::Index j = 0; j < dim; ++j) {
            if ((i & ~keep_mask) != (j & ~keep_mask)) continue;
            out(ri, reduced_index(j)) += rho(i, j);
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    return DensityMatrix::trusted(partial_trace(rho.matrix(), rho.n_qubits(), keep));
}

Matrix unitary_from_hamiltonian(const HermitianOperator& h, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    const auto& vals = es.eigenvalues();
    Eigen::VectorXcd phases(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); ++k) phases(k) = std::exp(cplx(0.0, -t * vals(k)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double unitarity_deviation(const Matrix& u) {
    return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0,
         1.0, 0.0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0.0, cplx(0.0, -1.0),
         cplx(0.0, 1.0), 0.0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0,
         0.0, -1.0;
    return m;
}

Matrix embed(const Matrix& single, std::size_t site, std::size_t n_qubits) {
    if (site >= n_qubits) throw ArgumentError("embed: site out of range");
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < n_qubits; ++q)
        out = tensor_product(out, q == site ? single : identity(2));
    return out;
}

Eigen::Index basis_index(const char* label) {
    Eigen::Index idx = 0;
    for (const char* c = label; *c; ++c) {
        if (*c != 'g' && *c != 'e') throw ArgumentError("basis label must use 'g' and 'e'");
        idx = (idx << 1) | (*c == 'e' ? 1 : 0);
    }
    return idx;
}

Matrix excitation_block_part(const Matrix& m) {
    Matrix out = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (std::popcount(static_cast<unsigned>(i)) != std::popcount(static_cast<unsigned>(j))) out(i, j) = 0.0;
    return out;
}

Matrix free_rotation(const Matrix& m, double gap, double t) {
    Matrix out = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const int dn = std::popcount(static_cast<unsigned>(i)) - std::popcount(static_cast<unsigned>(j));
            if (dn != 0) out(i, j) *= std::polar(1.0, gap * dn * t);
        }
    return out;
}

} // namespace qrayleigh::qmath
