// dynamics.cpp: Coarse-grained open dynamics of the target qubit

#include "qrayleigh/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "qrayleigh/collision.hpp"
#include "qrayleigh/errors.hpp"
#include "qrayleigh/measures.hpp"
#include "qrayleigh/parallel.hpp"

namespace qrayleigh::dynamics {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

Matrix vec_to_mat(const Eigen::VectorXcd& v) {
    Matrix m(2, 2);
    m << v(0), v(2),
         v(1), v(3);
    return m;
}

Eigen::VectorXcd mat_to_vec(const Matrix& m) {
    Eigen::VectorXcd v(4);
    v << m(0, 0), m(1, 0), m(0, 1), m(1, 1);
    return v;
}

void check_rho_s(const Matrix& rho_s) {
    if (rho_s.rows() != 2 || rho_s.cols() != 2) throw DimensionError("target qubit state must be 2x2");
}

} // namespace

double ClosedFormCoefficients::gamma_at(double t) const {
    if (decay_rate == 0.0) return 1.0;
    return std::exp(-decay_rate * t);
}

double collectivity_alpha(Scenario scenario, double jt) {
    if (scenario == Scenario::Collective) return 1.0;
    const double c = std::cos(jt);
    return 2.0 * c / (1.0 + c * c);
}

double collision_eta(Scenario scenario, double jt) {
    if (scenario == Scenario::Collective) {
        const double s = std::sin(2.0 * kSqrt2 * jt);
        return s * s;
    }
    return std::sin(jt) * std::sin(2.0 * jt);
}

double collision_eta_over_alpha(Scenario scenario, double jt) {
    if (scenario == Scenario::Collective) return collision_eta(scenario, jt);
    const double s = std::sin(jt), c = std::cos(jt);
    return s * s * (1.0 + c * c);
}

ClosedFormCoefficients closed_form_coefficients(const BathParams& raw) {
    const BathParams params = raw.normalized();
    const double jt = params.coupling_time();
    ClosedFormCoefficients out;
    out.alpha = collectivity_alpha(params.scenario, jt);
    out.eta = collision_eta(params.scenario, jt);
    out.eta_over_alpha = collision_eta_over_alpha(params.scenario, jt);

    const double al = out.alpha * params.lambda();
    if (!(1.0 + 2.0 * al > 0.0)) {
        std::ostringstream os;
        os << "lambda = " << params.lambda() << " <= -1/(2 alpha) with alpha = " << out.alpha
           << ": no thermal steady state";
        throw NonThermalSteadyStateError(os.str());
    }
    const auto bounds = coherence_bounds(params.kind, params.beta_b, params.qubit);
    if (!bounds.contains(params.coherence))
        throw DomainError("coherence outside the positivity bound of the projectile family");

    const auto p = gibbs_weights(params.beta_b, params.qubit);
    out.gamma_g = (p.ground + al) / (1.0 + 2.0 * al);
    out.gamma_e = (p.excited + al) / (1.0 + 2.0 * al);
    out.decay_rate = params.rate * (1.0 + 2.0 * al) * out.eta_over_alpha;
    return out;
}

DensityMatrix analytic_state(double t, const GibbsWeights& q, const BathParams& params) {
    if (!(t >= 0.0)) throw ArgumentError("time must be non-negative");
    const auto c = closed_form_coefficients(params);
    const double g = c.gamma_at(t);
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = c.gamma_g * (1.0 - q.excited * g) + c.gamma_e * q.ground * g;
    m(1, 1) = c.gamma_e * (1.0 - q.ground * g) + c.gamma_g * q.excited * g;
    return DensityMatrix::trusted(std::move(m));
}

DensityMatrix analytic_state(double t, double beta_s0, const BathParams& params) {
    return analytic_state(t, gibbs_weights(beta_s0, params.qubit), params);
}

Matrix generator_apply(const Matrix& rho_s, const BathParams& bath) {
    check_rho_s(rho_s);
    const BathParams p = bath.normalized();
    const auto u = collision::cached_unitary(p.scenario, p.coupling, p.tau);
    // Arrival times are uniform on the scale of the free phases, so only
    // bath coherences between equal-energy states survive the average.
    const Matrix rho_b = qmath::excitation_block_part(projectile_state(p).matrix());
    return p.rate * (collision::collide(rho_s, rho_b, u->matrix) - rho_s);
}

Matrix generator_apply(const Matrix& rho_s, std::span<const BathParams> baths) {
    if (baths.empty() || baths.size() > 2) throw ArgumentError("generator supports one or two baths");
    Matrix out = Matrix::Zero(2, 2);
    for (const auto& b : baths) out += generator_apply(rho_s, b);
    return out;
}

Matrix generator_superoperator(std::span<const BathParams> baths) {
    Matrix sup(4, 4);
    for (int k = 0; k < 4; ++k) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(4);
        e(k) = 1.0;
        sup.col(k) = mat_to_vec(generator_apply(vec_to_mat(e), baths));
    }
    return sup;
}

Trajectory integrate_master_equation(const DensityMatrix& rho0, std::span<const BathParams> baths,
                                     std::span<const double> t_grid) {
    if (rho0.dim() != 2) throw DimensionError("initial state must be a single qubit");
    if (t_grid.empty() || t_grid.front() != 0.0) throw ArgumentError("time grid must start at 0");
    for (std::size_t k = 1; k < t_grid.size(); ++k)
        if (!(t_grid[k] > t_grid[k - 1])) throw ArgumentError("time grid must be strictly increasing");

    double max_rate = 0.0;
    for (const auto& b : baths) max_rate = std::max(max_rate, b.rate);
    const double h_max = max_rate > 0.0 ? 1e-3 / max_rate : std::numeric_limits<double>::infinity();

    const Matrix sup = generator_superoperator(baths);
    auto rhs = [&sup](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return sup * v; };

    Trajectory out;
    out.times.assign(t_grid.begin(), t_grid.end());
    out.states.reserve(t_grid.size());
    Eigen::VectorXcd v = mat_to_vec(rho0.matrix());
    out.states.push_back(rho0);
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
        const double span = t_grid[k] - t_grid[k - 1];
        const auto n_steps = static_cast<long>(std::ceil(span / std::min(h_max, span)));
        const double h = span / static_cast<double>(n_steps);
        for (long s = 0; s < n_steps; ++s) {
            const Eigen::VectorXcd k1 = rhs(v);
            const Eigen::VectorXcd k2 = rhs(v + 0.5 * h * k1);
            const Eigen::VectorXcd k3 = rhs(v + 0.5 * h * k2);
            const Eigen::VectorXcd k4 = rhs(v + h * k3);
            v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        const Matrix m = vec_to_mat(v);
        const auto report = qmath::validate_density_matrix(m, 1e-8);
        if (!report.ok()) {
            std::ostringstream os;
            os << "integration left the state space at t = " << t_grid[k]
               << " (trace dev " << report.trace_deviation << ", hermiticity dev "
               << report.hermiticity_deviation << ", min eigenvalue " << report.min_eigenvalue << ")";
            throw NumericalError(os.str());
        }
        out.states.push_back(DensityMatrix::trusted(m));
    }
    return out;
}

LindbladRates lindblad_rates(const BathParams& raw) {
    const BathParams params = raw.normalized();
    const auto c = closed_form_coefficients(params);
    const double al = c.alpha * params.lambda();
    const auto p = gibbs_weights(params.beta_b, params.qubit);
    const double jt = params.coupling_time();

    LindbladRates r;
    r.kappa_1 = params.rate * (p.ground + al) * c.eta_over_alpha;
    r.kappa_2 = params.rate * (p.excited + al) * c.eta_over_alpha;
    if (params.scenario == Scenario::Sequential) {
        const double s = std::sin(jt);
        r.c_dephase = params.rate * 0.5 * s * s * s * s;
    } else {
        const double s = std::sin(kSqrt2 * jt);
        // Pair populations on |gg>,|ee>: p_g^2 + p_e^2 for uncorrelated pairs,
        // p_g + p_e = 1 for the classically correlated and entangled families.
        const double same = params.kind == ProjectileKind::Discordant
                                ? p.ground * p.ground + p.excited * p.excited
                                : 1.0;
        r.c_dephase = params.rate * 2.0 * same * s * s * s * s;
    }
    return r;
}

Matrix heat_dissipator_apply(const Matrix& rho, const LindbladRates& rates) {
    check_rho_s(rho);
    Matrix lower = Matrix::Zero(2, 2); // sigma^- = |g><e|
    lower(0, 1) = 1.0;
    const Matrix raise = lower.adjoint();
    auto dissipator = [&rho](const Matrix& a) {
        const Matrix ada = a.adjoint() * a;
        return Matrix(a * rho * a.adjoint() - 0.5 * (ada * rho + rho * ada));
    };
    return rates.kappa_1 * dissipator(lower) + rates.kappa_2 * dissipator(raise);
}

Matrix dephasing_dissipator_apply(const Matrix& rho, const LindbladRates& rates) {
    check_rho_s(rho);
    Matrix out = Matrix::Zero(2, 2);
    out(0, 1) = -rates.c_dephase * rho(0, 1);
    out(1, 0) = -rates.c_dephase * rho(1, 0);
    return out;
}

Matrix lindblad_apply(const Matrix& rho, const LindbladRates& rates) {
    return heat_dissipator_apply(rho, rates) + dephasing_dissipator_apply(rho, rates);
}

TrajectoryEnsemble stochastic_trajectories(const DensityMatrix& rho0, const BathParams& raw,
                                           std::span<const double> times, int n_traj, std::uint64_t seed,
                                           std::size_t threads) {
    if (n_traj < 1) throw ArgumentError("n_traj must be at least 1");
    if (rho0.dim() != 2) throw DimensionError("initial state must be a single qubit");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (!(times[k] >= times[k - 1])) throw ArgumentError("time grid must be non-decreasing");
    const BathParams params = raw.normalized();
    if (params.rate < 0.0) throw ArgumentError("arrival rate must be non-negative");

    const auto u = collision::cached_unitary(params.scenario, params.coupling, params.tau);
    const collision::CollisionUnitary& unitary = *u;
    const DensityMatrix rho_b = projectile_state(params);
    const std::size_t n_t = times.size();
    const auto n = static_cast<std::size_t>(n_traj);

    // Row-major [trajectory][time] excited populations.
    std::vector<double> samples(n * n_t);
    parallel::parallel_for(
        n,
        [&](std::size_t traj) {
            std::mt19937_64 rng(parallel::split_seed(seed, traj));
            std::exponential_distribution<double> gap(params.rate > 0.0 ? params.rate : 1.0);
            DensityMatrix state = rho0;
            double next = params.rate > 0.0 ? gap(rng) : std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < n_t; ++k) {
                while (next <= times[k]) {
                    // Projectile prepared at arrival time, seen in the interaction picture.
                    const DensityMatrix arriving =
                        DensityMatrix::trusted(qmath::free_rotation(rho_b.matrix(), params.qubit.gap(), next));
                    state = collision::single_collision_map(state, arriving, unitary);
                    next += gap(rng);
                }
                samples[traj * n_t + k] = state.population(1);
            }
        },
        threads);

    TrajectoryEnsemble out;
    out.seed = seed;
    out.n_traj = n_traj;
    out.times.assign(times.begin(), times.end());
    out.mean_excited_population.assign(n_t, 0.0);
    out.std_error.assign(n_t, 0.0);
    for (std::size_t k = 0; k < n_t; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += samples[i * n_t + k];
        const double mean = sum / static_cast<double>(n);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = samples[i * n_t + k] - mean;
            ss += d * d;
        }
        out.mean_excited_population[k] = mean;
        out.std_error[k] = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
    }
    return out;
}

std::vector<CollisionSnapshot> intra_collision_snapshots(const DensityMatrix& rho_s, const DensityMatrix& rho_b,
                                                         Scenario scenario, double coupling,
                                                         std::span<const double> times) {
    if (scenario != Scenario::Collective)
        throw ArgumentError("intra-collision snapshots are defined for collective collisions");
    if (rho_s.dim() != 2 || rho_b.dim() != 4) throw DimensionError("snapshots need a qubit and a pair state");
    const auto h = collision::star_interaction_hamiltonian(coupling, 3);
    const Matrix joint0 = qmath::tensor_product(rho_s.matrix(), rho_b.matrix());

    auto max_offdiag = [](const Matrix& m, auto&& f) {
        double r = 0.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                if (i != j) r = std::max(r, f(m(i, j)));
        return r;
    };
    auto re = [](cplx z) { return std::abs(z.real()); };
    auto mag = [](cplx z) { return std::abs(z); };

    std::vector<CollisionSnapshot> out;
    out.reserve(times.size());
    for (double t : times) {
        if (!(t >= 0.0)) throw ArgumentError("snapshot times must be non-negative");
        const Matrix u = qmath::unitary_from_hamiltonian(h, t);
        const Matrix joint = u * joint0 * u.adjoint();
        const Matrix b1b2 = qmath::partial_trace(joint, 3, {1, 2});
        const Matrix sb1 = qmath::partial_trace(joint, 3, {0, 1});
        const Matrix sb2 = qmath::partial_trace(joint, 3, {0, 2});

        CollisionSnapshot s;
        s.t = t;
        s.b1b2_l1_coherence = measures::l1_coherence(DensityMatrix::trusted(b1b2));
        s.b1b2_exchange_coherence = b1b2(1, 2).real();
        s.sb1_upper = sb1(1, 2);
        s.sb1_lower = sb1(2, 1);
        s.sb2_upper = sb2(1, 2);
        s.sb2_lower = sb2(2, 1);
        s.sb_max_real_offdiag = std::max(max_offdiag(sb1, re), max_offdiag(sb2, re));
        s.b1b2_max_imag = b1b2.imag().cwiseAbs().maxCoeff();
        for (std::size_t q = 0; q < 3; ++q) {
            const Matrix local = qmath::partial_trace(joint, 3, {q});
            s.local_offdiag_residual = std::max(s.local_offdiag_residual, max_offdiag(local, mag));
        }
        out.push_back(s);
    }
    return out;
}

Matrix extended_block_generator_apply(const Matrix& rho_s, const BathParams& raw) {
    check_rho_s(rho_s);
    const BathParams params = raw.normalized();
    static thread_local std::tuple<double, double, Matrix> memo{-1.0, -1.0, Matrix()};
    if (std::get<0>(memo) != params.coupling || std::get<1>(memo) != params.tau) {
        memo = {params.coupling, params.tau,
                collision::extended_collective_unitary(params.coupling, params.tau).matrix};
    }
    const Matrix pair = projectile_state(params).matrix();
    const Matrix block = qmath::excitation_block_part(qmath::tensor_product(pair, pair));
    return params.rate * (collision::collide(rho_s, block, std::get<2>(memo)) - rho_s);
}

PopulationRates population_rates(std::span<const BathParams> baths) {
    Matrix ground = Matrix::Zero(2, 2);
    ground(0, 0) = 1.0;
    Matrix excited = Matrix::Zero(2, 2);
    excited(1, 1) = 1.0;
    return {generator_apply(ground, baths)(1, 1).real(), generator_apply(excited, baths)(0, 0).real()};
}

PopulationRates extended_block_rates(const BathParams& params) {
    Matrix ground = Matrix::Zero(2, 2);
    ground(0, 0) = 1.0;
    Matrix excited = Matrix::Zero(2, 2);
    excited(1, 1) = 1.0;
    return {extended_block_generator_apply(ground, params)(1, 1).real(),
            extended_block_generator_apply(excited, params)(0, 0).real()};
}

} // namespace qrayleigh::dynamics
