// measures.cpp: Coherence and correlation quantifiers for one- and two-qubit states

#include "qrayleigh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "qrayleigh/errors.hpp"

namespace qrayleigh::measures {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Binary entropy in nats.
double binary_entropy(double x) { return -xlogx(x) - xlogx(1.0 - x); }

// Entropy of a 2x2 Hermitian, trace-t matrix scaled to unit trace.
double entropy_2x2(const Matrix& m) {
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double tr = a + d;
    if (tr <= 0.0) return 0.0;
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    const double l1 = std::max(0.0, (0.5 * tr + half_gap) / tr);
    const double l2 = std::max(0.0, (0.5 * tr - half_gap) / tr);
    return -xlogx(l1) - xlogx(l2);
}

void require_two_qubits(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw DimensionError("two-qubit measure expects a 4x4 state");
}

struct Candidate {
    double theta;
    double phi;
    double value;
};

// Golden-section minimisation of f on [lo, hi] down to `tol` in the argument.
template <class F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c), fd = f(d);
    while (hi - lo > tol) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    const double x = 0.5 * (lo + hi);
    return {x, f(x)};
}

} // namespace

LogUnit parse_log_unit(const std::string& s) {
    if (s == "nats") return LogUnit::Nats;
    if (s == "bits") return LogUnit::Bits;
    throw ArgumentError("units must be 'nats' or 'bits', got '" + s + "'");
}

double convert(double nats, LogUnit unit) {
    return unit == LogUnit::Bits ? nats / std::numbers::ln2 : nats;
}

double entropy_of_spectrum(const RealVector& eigenvalues) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) s -= xlogx(eigenvalues(k));
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_of_spectrum(qmath::hermitian_eigenvalues(rho.matrix()));
}

double l1_coherence(const DensityMatrix& rho) {
    const Matrix& m = rho.matrix();
    double s = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j) s += std::abs(m(i, j));
    return s;
}

double rel_entropy_coherence(const DensityMatrix& rho) {
    RealVector diag = rho.matrix().diagonal().real();
    const double v = entropy_of_spectrum(diag) - von_neumann_entropy(rho);
    return std::max(0.0, v);
}

double mutual_information(const DensityMatrix& rho_ab) {
    require_two_qubits(rho_ab);
    const auto a = qmath::partial_trace(rho_ab, {0});
    const auto b = qmath::partial_trace(rho_ab, {1});
    return von_neumann_entropy(a) + von_neumann_entropy(b) - von_neumann_entropy(rho_ab);
}

double measured_conditional_entropy(const Matrix& rho, double theta, double phi) {
    // |psi0> = cos(theta/2)|g> + e^{i phi} sin(theta/2)|e>, |psi1> orthogonal.
    const cplx c0(std::cos(0.5 * theta), 0.0);
    const cplx s0 = std::polar(std::sin(0.5 * theta), phi);
    const cplx b0[2] = {c0, s0};
    const cplx b1[2] = {-std::conj(s0), std::conj(c0)};
    double total = 0.0;
    for (const cplx* v : {b0, b1}) {
        // Unnormalised conditional state of A: <v|_B rho |v>_B.
        Matrix cond = Matrix::Zero(2, 2);
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap) {
                cplx acc = 0.0;
                for (int b = 0; b < 2; ++b)
                    for (int bp = 0; bp < 2; ++bp)
                        acc += std::conj(v[b]) * rho(2 * a + b, 2 * ap + bp) * v[bp];
                cond(a, ap) = acc;
            }
        const double pk = cond.trace().real();
        if (pk > 1e-300) total += pk * entropy_2x2(cond);
    }
    return total;
}

MeasureResult classical_correlations(const DensityMatrix& rho_ab) {
    require_two_qubits(rho_ab);
    const Matrix& rho = rho_ab.matrix();
    const auto a = qmath::partial_trace(rho_ab, {0});
    const double s_a = von_neumann_entropy(a);

    constexpr double step = 5.0 * kDeg;
    Candidate best{0.0, 0.0, std::numeric_limits<double>::infinity()};
    for (int i = 0; i <= 36; ++i)
        for (int j = 0; j < 72; ++j) {
            const double th = i * step, ph = j * step;
            const double v = measured_conditional_entropy(rho, th, ph);
            if (v < best.value) best = {th, ph, v};
        }

    constexpr double angle_tol = 1e-9;
    constexpr int max_rounds = 200;
    double residual = std::numeric_limits<double>::infinity();
    int rounds = 0;
    while (rounds < max_rounds) {
        ++rounds;
        const Candidate before = best;
        auto [th, vth] = golden_min(
            [&](double t) { return measured_conditional_entropy(rho, t, best.phi); },
            std::max(0.0, best.theta - step), std::min(kPi, best.theta + step), angle_tol);
        if (vth <= best.value) best = {th, best.phi, vth};
        auto [ph, vph] = golden_min(
            [&](double p) { return measured_conditional_entropy(rho, best.theta, p); },
            best.phi - step, best.phi + step, angle_tol);
        if (vph <= best.value) best = {best.theta, ph, vph};
        residual = std::max(std::abs(best.theta - before.theta), std::abs(best.phi - before.phi));
        if (residual <= angle_tol || before.value - best.value <= 1e-16) break;
    }
    if (rounds == max_rounds && residual > 1e-6)
        throw NumericalError("classical-correlation optimizer did not converge", s_a - best.value);

    OptimizerInfo info;
    info.theta = best.theta;
    info.phi = std::fmod(std::fmod(best.phi, 2.0 * kPi) + 2.0 * kPi, 2.0 * kPi);
    info.residual = residual;
    info.rounds = rounds;
    return {std::max(0.0, s_a - best.value), MeasureId::ClassicalCorrelations, info};
}

MeasureResult quantum_discord(const DensityMatrix& rho_ab) {
    auto cc = classical_correlations(rho_ab);
    double d = mutual_information(rho_ab) - cc.value;
    if (d < 0.0) {
        if (d < -1e-10) throw NumericalError("negative quantum discord", d);
        d = 0.0;
    }
    return {d, MeasureId::QuantumDiscord, cc.optimizer};
}

double concurrence(const DensityMatrix& rho_ab) {
    require_two_qubits(rho_ab);
    const Matrix& rho = rho_ab.matrix();
    const Matrix yy = qmath::tensor_product(qmath::pauli_y(), qmath::pauli_y());
    const Matrix tilde = yy * rho.conjugate() * yy;
    // sqrt of eigenvalues of rho * tilde = singular values of sqrt(rho) sqrt(tilde).
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    RealVector ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Matrix sqrt_rho = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    const Matrix r = sqrt_rho * tilde * sqrt_rho;
    RealVector lam = qmath::hermitian_eigenvalues(0.5 * (r + r.adjoint())).cwiseMax(0.0).cwiseSqrt();
    std::sort(lam.data(), lam.data() + lam.size(), std::greater<double>());
    return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double entanglement_of_formation(const DensityMatrix& rho_ab, LogUnit unit) {
    const double c = concurrence(rho_ab);
    if (c <= 0.0) return 0.0;
    const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
    return convert(binary_entropy(x), unit);
}

} // namespace qrayleigh::measures
