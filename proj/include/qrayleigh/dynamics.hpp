// dynamics.hpp: Coarse-grained open dynamics of the target qubit: closed-form
// solution, collision generator, RK4 integration, Lindblad rates, a Poisson
// repeated-interaction ensemble and intra-collision snapshots.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qrayleigh/qmath.hpp"
#include "qrayleigh/states.hpp"

namespace qrayleigh::dynamics {

using qmath::DensityMatrix;

/// Ingredients of the closed-form qubit state for one bath.
///
/// `eta_over_alpha` is evaluated in its simplified form so the sequential
/// point J tau = pi/2 (alpha = eta = 0) stays finite. `decay_rate` is the
/// exponent of gamma(t) per unit time and already includes the arrival rate.
struct ClosedFormCoefficients {
    double alpha{1.0};
    double eta{0.0};
    double eta_over_alpha{0.0};
    double gamma_g{1.0};
    double gamma_e{0.0};
    double decay_rate{0.0};

    double gamma_at(double t) const;
};

// Collision-scenario factors as functions of J tau.
double collectivity_alpha(Scenario scenario, double coupling_time);
double collision_eta(Scenario scenario, double coupling_time);
double collision_eta_over_alpha(Scenario scenario, double coupling_time);

ClosedFormCoefficients closed_form_coefficients(const BathParams& params);

// Diagonal qubit state at time t starting from the thermal state at beta_s0.
DensityMatrix analytic_state(double t, double beta_s0, const BathParams& params);
DensityMatrix analytic_state(double t, const GibbsWeights& initial, const BathParams& params);

// sum over baths of p (tr_B[U (rho_S x rho_B) U^dagger] - rho_S), interaction picture.
Matrix generator_apply(const Matrix& rho_s, std::span<const BathParams> baths);
Matrix generator_apply(const Matrix& rho_s, const BathParams& bath);

// 4x4 matrix of generator_apply acting on column-stacked 2x2 matrices.
Matrix generator_superoperator(std::span<const BathParams> baths);

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
};

// Fixed-step RK4 with step <= min(1e-3 / max rate, grid spacing).
Trajectory integrate_master_equation(const DensityMatrix& rho0, std::span<const BathParams> baths,
                                     std::span<const double> t_grid);

/// Lindblad form of the single-bath generator. kappa_1 drives e -> g with
/// sigma^-, kappa_2 drives g -> e with sigma^+, c_dephase damps coherences.
/// All three include the arrival rate.
struct LindbladRates {
    double kappa_1{0.0};
    double kappa_2{0.0};
    double c_dephase{0.0};
};

LindbladRates lindblad_rates(const BathParams& params);

// D_h(rho) + D_d(rho) assembled from the rates (no free commutator).
Matrix lindblad_apply(const Matrix& rho, const LindbladRates& rates);
Matrix heat_dissipator_apply(const Matrix& rho, const LindbladRates& rates);
Matrix dephasing_dissipator_apply(const Matrix& rho, const LindbladRates& rates);

struct TrajectoryEnsemble {
    std::uint64_t seed{0};
    int n_traj{0};
    std::vector<double> times;
    std::vector<double> mean_excited_population;
    std::vector<double> std_error;
};

// Poisson repeated-interaction ensemble. Each trajectory draws exponential
// inter-arrival times at params.rate and applies one collision per arrival.
// Bit-identical for fixed (seed, n_traj) at any thread count.
TrajectoryEnsemble stochastic_trajectories(const DensityMatrix& rho0, const BathParams& params,
                                           std::span<const double> times, int n_traj, std::uint64_t seed,
                                           std::size_t threads = 0);

struct CollisionSnapshot {
    double t{0.0};
    double b1b2_l1_coherence{0.0};
    double b1b2_exchange_coherence{0.0}; // Re <ge|rho_B1B2|eg>
    cplx sb1_upper{};                    // <ge|rho_SB1|eg>
    cplx sb1_lower{};
    cplx sb2_upper{};
    cplx sb2_lower{};
    double sb_max_real_offdiag{0.0};
    double b1b2_max_imag{0.0};
    double local_offdiag_residual{0.0};
};

// Joint S-B1-B2 state evolved for partial durations t' of a collective collision.
std::vector<CollisionSnapshot> intra_collision_snapshots(const DensityMatrix& rho_s, const DensityMatrix& rho_b,
                                                         Scenario scenario, double coupling,
                                                         std::span<const double> times);

} // namespace qrayleigh::dynamics

namespace qrayleigh::dynamics {

// Two pairs per collision: the target meets rho_B x rho_B (four qubits)
// through one collective 5-qubit unitary.
Matrix extended_block_generator_apply(const Matrix& rho_s, const BathParams& params);

// Per-unit-time population transfer rates of a diagonal qubit state.
struct PopulationRates {
    double absorption{0.0}; // g -> e
    double emission{0.0};   // e -> g
};

PopulationRates population_rates(std::span<const BathParams> baths);
PopulationRates extended_block_rates(const BathParams& params);

} // namespace qrayleigh::dynamics
