// thermo.cpp: Temperatures, currents, entropy production and Onsager coefficients

#include "qrayleigh/thermo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "qrayleigh/dynamics.hpp"
#include "qrayleigh/errors.hpp"

namespace qrayleigh::thermo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double diagonal_residual(const Matrix& rho) { return std::max(std::abs(rho(0, 1)), std::abs(rho(1, 0))); }

Matrix matrix_log(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
    Eigen::VectorXcd logs(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < logs.size(); ++k) {
        const double v = es.eigenvalues()(k);
        if (!(v > 0.0)) throw UndefinedTemperatureError("logarithm of a rank-deficient state");
        logs(k) = std::log(v);
    }
    return es.eigenvectors() * logs.asDiagonal() * es.eigenvectors().adjoint();
}

// Transient Onsager coefficient (E_e - E_g)^2 p eta / (4 alpha).
double transient_coefficient(const BathParams& p) {
    const double gap = p.qubit.gap();
    return gap * gap * p.rate * dynamics::collision_eta_over_alpha(p.scenario, p.coupling_time()) / 4.0;
}

void require_matched(const BathParams& a, const BathParams& b) {
    if (a.scenario != b.scenario || a.coupling != b.coupling || a.tau != b.tau || a.rate != b.rate ||
        a.qubit.e_g != b.qubit.e_g || a.qubit.e_e != b.qubit.e_e)
        throw UnsupportedConfigurationError("two-bath relations need identical collision parameters");
    auto discordant = [](const BathParams& x) {
        return x.kind == ProjectileKind::Discordant || x.kind == ProjectileKind::Product;
    };
    if (!discordant(a) || !discordant(b))
        throw UnsupportedConfigurationError("two-bath relations are defined for discordant or product baths");
}

} // namespace

bool is_high_temperature(double beta, const QubitSpec& spec) {
    return beta * spec.gap() <= kHighTemperatureCutoff;
}

double inverse_temperature_of(const DensityMatrix& rho, const QubitSpec& spec) {
    if (rho.dim() != 2) throw DimensionError("temperature is defined for a single qubit");
    if (diagonal_residual(rho.matrix()) > 1e-12)
        throw ArgumentError("temperature is defined for diagonal qubit states");
    const double g = rho.population(0), e = rho.population(1);
    if (!(g > 0.0) || !(e > 0.0)) throw UndefinedTemperatureError("temperature undefined for a vanishing population");
    return std::log(g / e) / spec.gap();
}

double temperature_of(const DensityMatrix& rho, const QubitSpec& spec) {
    const double beta = inverse_temperature_of(rho, spec);
    if (beta == 0.0) return kInf;
    return 1.0 / beta;
}

double steady_inverse_temperature(const BathParams& params) {
    const auto c = dynamics::closed_form_coefficients(params);
    return std::log(c.gamma_g / c.gamma_e) / params.qubit.gap();
}

double steady_temperature(const BathParams& params) {
    const auto c = dynamics::closed_form_coefficients(params);
    // (E_g - E_e) / ln[(p_e + alpha lambda) / (p_g + alpha lambda)]
    const double ratio = std::log(c.gamma_e / c.gamma_g);
    if (ratio == 0.0) return kInf;
    return (params.qubit.e_g - params.qubit.e_e) / ratio;
}

namespace potentials {

double transient_delta_beta(double beta_s0, double beta_b) { return beta_s0 - beta_b; }

double transient_delta_c(double alpha, double lambda) { return alpha * (0.0 - 2.0 * lambda); }

double two_bath_delta_beta(double beta_b1, double beta_b2) { return beta_b2 - beta_b1; }

double two_bath_delta_c(double alpha, double lambda1, double lambda2) { return 2.0 * alpha * (lambda2 - lambda1); }

double two_bath_beta_infinity(double alpha, double beta_b1, double lambda1, double beta_b2, double lambda2) {
    return (beta_b1 + beta_b2) / (2.0 * (1.0 + alpha * lambda1 + alpha * lambda2));
}

} // namespace potentials

double heat_current_amplitude(double beta_s0, const BathParams& raw) {
    const BathParams params = raw.normalized();
    const auto c = dynamics::closed_form_coefficients(params);
    const auto q = gibbs_weights(beta_s0, params.qubit);
    const auto p = gibbs_weights(params.beta_b, params.qubit);
    const double al = c.alpha * params.lambda();
    return ((q.ground * p.excited - q.excited * p.ground) + al * (q.ground - q.excited)) * params.qubit.gap() *
           params.rate * c.eta_over_alpha;
}

double heat_current(double t, double beta_s0, const BathParams& params) {
    if (!(t >= 0.0)) throw ArgumentError("time must be non-negative");
    const double j0 = heat_current_amplitude(beta_s0, params);
    const double g = dynamics::closed_form_coefficients(params).gamma_at(t);
    return j0 == 0.0 ? 0.0 : j0 * g;
}

AnomalousCurrent anomalous_heat_current(double t, const BathParams& raw) {
    const BathParams params = raw.normalized();
    if (params.kind != ProjectileKind::Discordant) return {0.0, false};
    if (!(t >= 0.0)) throw ArgumentError("time must be non-negative");
    const auto c = dynamics::closed_form_coefficients(params);
    const auto q = gibbs_weights(params.beta_b, params.qubit);
    // lambda eta (q_g - q_e)(E_e - E_g) p gamma(t)
    const double v = params.lambda() * c.eta * (q.ground - q.excited) * params.qubit.gap() * params.rate;
    return {v == 0.0 ? 0.0 : v * c.gamma_at(t), true};
}

EntropyProduction entropy_production(double t, double beta_s0, const BathParams& params) {
    const double j = heat_current(t, beta_s0, params);
    if (j == 0.0) return {};
    const double beta_t = inverse_temperature_of(dynamics::analytic_state(t, beta_s0, params), params.qubit);
    const double beta_inf = steady_inverse_temperature(params);
    EntropyProduction out;
    out.entropy_rate = j * beta_t;
    out.entropy_flux = -j * beta_inf;
    out.production = j * (beta_t - beta_inf);
    return out;
}

EntropyProduction entropy_production_from(const Matrix& rho, const Matrix& rho_dot, const Matrix& rho_inf) {
    EntropyProduction out;
    out.entropy_rate = -(rho_dot * matrix_log(rho)).trace().real();
    out.entropy_flux = (rho_dot * matrix_log(rho_inf)).trace().real();
    out.production = out.entropy_rate + out.entropy_flux;
    return out;
}

CurrentRecord current_record(double t, double beta_s0, const BathParams& params) {
    CurrentRecord r;
    r.t = t;
    r.heat = heat_current(t, beta_s0, params);
    r.coherence = coherence_current(t, beta_s0, params);
    const auto ep = entropy_production(t, beta_s0, params);
    r.entropy_production = ep.production;
    r.entropy_flux = ep.entropy_flux;
    r.temperature = temperature_of(dynamics::analytic_state(t, beta_s0, params), params.qubit);
    return r;
}

double coherence_current(double t, double beta_s0, const BathParams& raw, bool require_high_t) {
    const BathParams params = raw.normalized();
    if (require_high_t && !(is_high_temperature(beta_s0, params.qubit) && is_high_temperature(params.beta_b, params.qubit)))
        throw ArgumentError("coherence current requested outside the high-temperature regime");
    const auto c = dynamics::closed_form_coefficients(params);
    const double l = transient_coefficient(params);
    const double dbeta = potentials::transient_delta_beta(beta_s0, params.beta_b);
    const double dc = potentials::transient_delta_c(c.alpha, params.lambda());
    const double minus_jc = l * dbeta - l * beta_s0 * dc;
    return minus_jc == 0.0 ? 0.0 : -c.gamma_at(t) * minus_jc;
}

OnsagerMatrix onsager_coefficients(const BathParams& raw, double beta_s0) {
    const BathParams params = raw.normalized();
    const auto c = dynamics::closed_form_coefficients(params);
    const double l = transient_coefficient(params);
    OnsagerMatrix m{l, l, l, l, OnsagerRegime::TransientHighT, 0.0, 0.0};
    m.delta_beta = potentials::transient_delta_beta(beta_s0, params.beta_b);
    m.delta_c = potentials::transient_delta_c(c.alpha, params.lambda());
    return m;
}

OnsagerMatrix onsager_coefficients(const BathParams& raw1, const BathParams& raw2) {
    const BathParams b1 = raw1.normalized(), b2 = raw2.normalized();
    require_matched(b1, b2);
    const double alpha = dynamics::collectivity_alpha(b1.scenario, b1.coupling_time());
    const double l = transient_coefficient(b1) / 2.0;
    OnsagerMatrix m{l, l, l, l, OnsagerRegime::TwoBathSteadyHighT, 0.0, 0.0};
    m.delta_beta = potentials::two_bath_delta_beta(b1.beta_b, b2.beta_b);
    m.delta_c = potentials::two_bath_delta_c(alpha, b1.lambda(), b2.lambda());
    return m;
}

NumericOnsager extract_onsager_numeric(const BathParams& raw, double dbeta_step, double dc_step) {
    const BathParams base = raw.normalized();
    if (base.kind != ProjectileKind::Discordant)
        throw ArgumentError("numeric Onsager extraction needs a discordant or product bath");
    if (!(dbeta_step > 0.0) || !(dc_step > 0.0)) throw ArgumentError("finite-difference steps must be positive");
    const double alpha = dynamics::collectivity_alpha(base.scenario, base.coupling_time());
    if (std::abs(alpha) < 1e-12) throw ArgumentError("coherence potential vanishes at alpha = 0");
    const double beta_b = base.beta_b;
    const double lambda0 = base.lambda();
    const Matrix h_s = base.qubit.hamiltonian();

    // Bath and initial qubit state for forces (X_b, X_c).
    auto configure = [&](double xb, double xc) {
        const double beta_s0 = beta_b + xb;
        const double dc = -xc / beta_s0;
        BathParams b = base;
        b.coherence = lambda0 - dc / (2.0 * alpha);
        return std::pair{b, beta_s0};
    };
    auto heat = [&](double xb, double xc) {
        auto [b, beta_s0] = configure(xb, xc);
        const Matrix rho0 = thermal_qubit(beta_s0, b.qubit).matrix();
        return (h_s * dynamics::generator_apply(rho0, b)).trace().real();
    };
    auto production = [&](double xb, double xc) {
        auto [b, beta_s0] = configure(xb, xc);
        const Matrix rho0 = thermal_qubit(beta_s0, b.qubit).matrix();
        const std::array<BathParams, 1> baths{b};
        const auto r = dynamics::population_rates(baths);
        Matrix rho_inf = Matrix::Zero(2, 2);
        rho_inf(1, 1) = r.absorption / (r.absorption + r.emission);
        rho_inf(0, 0) = 1.0 - rho_inf(1, 1).real();
        return entropy_production_from(rho0, dynamics::generator_apply(rho0, b), rho_inf).production;
    };

    const double hb = dbeta_step;
    const double hc = beta_b * dc_step; // X_c step at X_b = 0

    NumericOnsager out;
    OnsagerMatrix& m = out.matrix;
    m.regime = OnsagerRegime::TransientHighT;
    m.delta_beta = hb;
    m.delta_c = dc_step;
    m.l_hh = (heat(hb, 0.0) - heat(-hb, 0.0)) / (2.0 * hb);
    m.l_hc = (heat(0.0, hc) - heat(0.0, -hc)) / (2.0 * hc);
    // Coherence flux K = Pi / X_c along X_b = 0.
    auto flux = [&](double xc) { return production(0.0, xc) / xc; };
    m.l_cc = (flux(hc) - flux(-hc)) / (2.0 * hc);
    const double mixed = (production(hb, hc) - production(hb, -hc) - production(-hb, hc) + production(-hb, -hc)) /
                         (4.0 * hb * hc);
    m.l_ch = mixed - m.l_hc;

    // Response to a finite force of half the base inverse temperature.
    const double force = 0.5 * beta_b;
    const double lambda_max = coherence_bounds(ProjectileKind::Discordant, beta_b, base.qubit).upper;
    const double force_c = std::min(force, 0.9 * (lambda_max - std::abs(lambda0)) * 2.0 * std::abs(alpha) * beta_b);
    const double j0 = heat(0.0, 0.0);
    const double secant_hh = (heat(force, 0.0) - j0) / force;
    const double secant_hc = (heat(0.0, force_c) - j0) / force_c;
    auto rel = [](double a, double b) { return b == 0.0 ? std::abs(a) : std::abs(a - b) / std::abs(b); };
    out.nonlinearity = std::max(rel(secant_hh, m.l_hh), rel(secant_hc, m.l_hc));
    out.nonlinear_regime = out.nonlinearity > 0.05;
    return out;
}

TwoBathSteady two_bath_steady(const BathParams& raw1, const BathParams& raw2) {
    const BathParams b1 = raw1.normalized(), b2 = raw2.normalized();
    require_matched(b1, b2);
    const std::array<BathParams, 2> both{b1, b2};
    const auto r = dynamics::population_rates(both);
    const double total = r.absorption + r.emission;
    if (!(total > 0.0)) throw NumericalError("two-bath generator has no unique steady state");

    Matrix rho = Matrix::Zero(2, 2);
    rho(1, 1) = r.absorption / total;
    rho(0, 0) = r.emission / total;
    TwoBathSteady out;
    out.state = DensityMatrix::trusted(rho);
    out.beta_infinity = inverse_temperature_of(out.state, b1.qubit);

    const double alpha = dynamics::collectivity_alpha(b1.scenario, b1.coupling_time());
    out.beta_infinity_formula =
        potentials::two_bath_beta_infinity(alpha, b1.beta_b, b1.lambda(), b2.beta_b, b2.lambda());

    const Matrix h_s = b1.qubit.hamiltonian();
    out.j_h_bath1 = (h_s * dynamics::generator_apply(rho, b1)).trace().real();
    out.j_h_bath2 = (h_s * dynamics::generator_apply(rho, b2)).trace().real();

    const auto l = onsager_coefficients(b1, b2);
    const double minus_jc = l.l_ch * l.delta_beta - l.l_cc * out.beta_infinity_formula * l.delta_c;
    out.j_c = minus_jc == 0.0 ? 0.0 : -minus_jc;
    out.pi = -out.j_h_bath1 * steady_inverse_temperature(b1) - out.j_h_bath2 * steady_inverse_temperature(b2);
    return out;
}

double two_bath_heat_current_linear(const BathParams& raw1, const BathParams& raw2) {
    const BathParams b1 = raw1.normalized(), b2 = raw2.normalized();
    const auto l = onsager_coefficients(b1, b2);
    const double alpha = dynamics::collectivity_alpha(b1.scenario, b1.coupling_time());
    const double beta_inf = potentials::two_bath_beta_infinity(alpha, b1.beta_b, b1.lambda(), b2.beta_b, b2.lambda());
    return l.l_hh * l.delta_beta - l.l_hc * beta_inf * l.delta_c;
}

} // namespace qrayleigh::thermo
