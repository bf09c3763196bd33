// measures.hpp: Coherence and correlation quantifiers for one- and two-qubit states

#pragma once

#include <optional>
#include <string>

#include "qrayleigh/qmath.hpp"

namespace qrayleigh::measures {

using qmath::DensityMatrix;

enum class MeasureId {
    VonNeumannEntropy,
    L1Coherence,
    RelEntropyCoherence,
    MutualInformation,
    ClassicalCorrelations,
    QuantumDiscord,
    EntanglementOfFormation,
};

enum class LogUnit { Nats, Bits };

LogUnit parse_log_unit(const std::string& s);
double convert(double nats, LogUnit unit);

// Bloch angles of the optimal projective measurement on subsystem B.
struct OptimizerInfo {
    double theta{0.0};
    double phi{0.0};
    double residual{0.0};
    int rounds{0};
};

struct MeasureResult {
    double value{0.0};
    MeasureId id{MeasureId::ClassicalCorrelations};
    std::optional<OptimizerInfo> optimizer;
};

// -sum e ln e over the spectrum, with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_of_spectrum(const RealVector& eigenvalues);

double l1_coherence(const DensityMatrix& rho);
double rel_entropy_coherence(const DensityMatrix& rho);

double mutual_information(const DensityMatrix& rho_ab);

// Conditional entropy sum_k p_k S(rho_A|k) after measuring B along the Bloch
// direction (theta, phi).
double measured_conditional_entropy(const Matrix& rho_ab, double theta, double phi);

MeasureResult classical_correlations(const DensityMatrix& rho_ab);
MeasureResult quantum_discord(const DensityMatrix& rho_ab);

double concurrence(const DensityMatrix& rho_ab);
double entanglement_of_formation(const DensityMatrix& rho_ab, LogUnit unit = LogUnit::Nats);

} // namespace qrayleigh::measures
