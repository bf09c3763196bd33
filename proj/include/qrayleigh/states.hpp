// states.hpp: Thermal target qubit and the correlated two-qubit projectile families

#pragma once

#include <string>

#include "qrayleigh/qmath.hpp"

namespace qrayleigh {

using qmath::DensityMatrix;

struct QubitSpec {
    double e_g{1.0};
    double e_e{2.0};

    double gap() const { return e_e - e_g; }
    void validate() const;
    Matrix hamiltonian() const;
};

enum class ProjectileKind { Classical, Discordant, Entangled, Product };

enum class Scenario { Sequential, Collective };

std::string to_string(ProjectileKind kind);
std::string to_string(Scenario scenario);
ProjectileKind parse_kind(const std::string& s);
Scenario parse_scenario(const std::string& s);

/// One projectile bath. `coherence` is lambda for Discordant, mu for
/// Entangled and ignored for Classical. `coupling` is J and `rate` is the
/// Poisson arrival rate p.
struct BathParams {
    ProjectileKind kind{ProjectileKind::Product};
    double beta_b{2.0};
    double coherence{0.0};
    Scenario scenario{Scenario::Collective};
    double coupling{0.05};
    double tau{1.0};
    double rate{1.0};
    QubitSpec qubit{};

    // Product folds into Discordant with lambda = 0; Classical drops coherence.
    BathParams normalized() const;

    // Discordant lambda, zero for every other family.
    double lambda() const;
    double coupling_time() const { return coupling * tau; }
};

// Boltzmann weights of a two-level system.
struct GibbsWeights {
    double ground{1.0};
    double excited{0.0};
};

GibbsWeights gibbs_weights(double beta, const QubitSpec& spec);

DensityMatrix thermal_qubit(double beta, const QubitSpec& spec);

struct CoherenceBounds {
    double lower{0.0};
    double upper{0.0};

    bool contains(double x) const { return x >= lower && x <= upper; }
};

CoherenceBounds coherence_bounds(ProjectileKind kind, double beta_b, const QubitSpec& spec);

// Raw 4x4 projectile matrix without the positivity-bound check.
Matrix projectile_matrix(ProjectileKind kind, double beta_b, double coherence, const QubitSpec& spec);

DensityMatrix projectile_state(const BathParams& params);

} // namespace qrayleigh
