// states.cpp: Thermal target qubit and the correlated two-qubit projectile families

#include "qrayleigh/states.hpp"

#include <cmath>
#include <sstream>

#include "qrayleigh/errors.hpp"

namespace qrayleigh {

void QubitSpec::validate() const {
    if (!(e_e > e_g)) throw ArgumentError("qubit levels require E_e > E_g");
}

Matrix QubitSpec::hamiltonian() const {
    Matrix h = Matrix::Zero(2, 2);
    h(0, 0) = e_g;
    h(1, 1) = e_e;
    return h;
}

std::string to_string(ProjectileKind kind) {
    switch (kind) {
    case ProjectileKind::Classical: return "classical";
    case ProjectileKind::Discordant: return "discordant";
    case ProjectileKind::Entangled: return "entangled";
    case ProjectileKind::Product: return "product";
    }
    return "unknown";
}

std::string to_string(Scenario scenario) {
    return scenario == Scenario::Sequential ? "sequential" : "collective";
}

ProjectileKind parse_kind(const std::string& s) {
    if (s == "classical") return ProjectileKind::Classical;
    if (s == "discordant") return ProjectileKind::Discordant;
    if (s == "entangled") return ProjectileKind::Entangled;
    if (s == "product") return ProjectileKind::Product;
    throw ArgumentError("unknown projectile kind '" + s + "'");
}

Scenario parse_scenario(const std::string& s) {
    if (s == "sequential") return Scenario::Sequential;
    if (s == "collective") return Scenario::Collective;
    throw ArgumentError("unknown collision scenario '" + s + "'");
}

BathParams BathParams::normalized() const {
    BathParams out = *this;
    if (out.kind == ProjectileKind::Product) {
        out.kind = ProjectileKind::Discordant;
        out.coherence = 0.0;
    } else if (out.kind == ProjectileKind::Classical) {
        out.coherence = 0.0;
    }
    return out;
}

double BathParams::lambda() const {
    return kind == ProjectileKind::Discordant ? coherence : 0.0;
}

GibbsWeights gibbs_weights(double beta, const QubitSpec& spec) {
    if (!(beta > 0.0)) throw ArgumentError("inverse temperature must be positive");
    spec.validate();
    // Relative to the ground level so large beta does not underflow both weights.
    const double boltz = std::exp(-beta * spec.gap());
    const double z = 1.0 + boltz;
    return {1.0 / z, boltz / z};
}

DensityMatrix thermal_qubit(double beta, const QubitSpec& spec) {
    const auto w = gibbs_weights(beta, spec);
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = w.ground;
    m(1, 1) = w.excited;
    return DensityMatrix::trusted(std::move(m));
}

CoherenceBounds coherence_bounds(ProjectileKind kind, double beta_b, const QubitSpec& spec) {
    const auto w = gibbs_weights(beta_b, spec);
    switch (kind) {
    case ProjectileKind::Discordant: {
        const double b = w.ground * w.excited;
        return {-b, b};
    }
    case ProjectileKind::Entangled: {
        const double b = std::sqrt(w.ground * w.excited);
        return {-b, b};
    }
    case ProjectileKind::Classical:
    case ProjectileKind::Product:
        return {0.0, 0.0};
    }
    return {0.0, 0.0};
}

Matrix projectile_matrix(ProjectileKind kind, double beta_b, double coherence, const QubitSpec& spec) {
    const auto w = gibbs_weights(beta_b, spec);
    const double pg = w.ground, pe = w.excited;
    Matrix m = Matrix::Zero(4, 4);
    // Basis |gg>, |ge>, |eg>, |ee>.
    switch (kind) {
    case ProjectileKind::Product:
    case ProjectileKind::Discordant:
        m(0, 0) = pg * pg;
        m(1, 1) = pg * pe;
        m(2, 2) = pe * pg;
        m(3, 3) = pe * pe;
        if (kind == ProjectileKind::Discordant) {
            m(1, 2) = coherence;
            m(2, 1) = coherence;
        }
        break;
    case ProjectileKind::Classical:
    case ProjectileKind::Entangled:
        m(0, 0) = pg;
        m(3, 3) = pe;
        if (kind == ProjectileKind::Entangled) {
            m(0, 3) = coherence;
            m(3, 0) = coherence;
        }
        break;
    }
    return m;
}

DensityMatrix projectile_state(const BathParams& params) {
    const BathParams p = params.normalized();
    const auto bounds = coherence_bounds(p.kind, p.beta_b, p.qubit);
    if (!bounds.contains(p.coherence)) {
        std::ostringstream os;
        os.precision(17);
        os << (p.kind == ProjectileKind::Discordant ? "|lambda| <= lambda_max = p_g p_e"
                                                    : "|mu| <= mu_max = sqrt(p_g p_e)")
           << " violated: coherence " << p.coherence << ", bound " << bounds.upper;
        throw DomainError(os.str());
    }
    return DensityMatrix::trusted(projectile_matrix(p.kind, p.beta_b, p.coherence, p.qubit));
}

} // namespace qrayleigh
