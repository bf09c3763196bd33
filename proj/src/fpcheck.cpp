#include "qrayleigh/fpcheck.hpp"

#include <algorithm>
#include <cmath>

#include "qrayleigh/dynamics.hpp"
#include "qrayleigh/errors.hpp"

namespace qrayleigh::fpcheck {

namespace {

BathParams discordant_only(const BathParams& raw) {
    const BathParams params = raw.normalized();
    if (params.kind != ProjectileKind::Discordant)
        throw ArgumentError("heat-equation coefficients need a discordant or product bath");
    return params;
}

double inversion(const Matrix& rho) { return (rho(1, 1) - rho(0, 0)).real(); }

} // namespace

FPCoefficients heat_equation_coefficients(const BathParams& raw) {
    const BathParams params = discordant_only(raw);
    const auto c = dynamics::closed_form_coefficients(params);
    const auto p = gibbs_weights(params.beta_b, params.qubit);
    const double scale = params.rate * c.eta_over_alpha;
    const double al = c.alpha * params.lambda();

    FPCoefficients f;
    f.d_polarization_thermal = p.excited * scale;
    f.d_polarization_coherent = al * scale;
    f.d_polarization = (p.excited + al) * scale;
    f.drift_coupling = -2.0 * f.d_polarization;
    f.d_inversion_const_thermal = scale;
    f.d_inversion_const_coherent = 2.0 * al * scale;
    f.d_inversion_const = (1.0 + 2.0 * al) * scale;
    f.d_inversion_slope = (p.ground - p.excited) * scale;
    return f;
}

double MomentReport::max_residual() const {
    return std::max({km_residual_excited, km_residual_ground, rate_identity_residual, drift_residual,
                     relaxation_residual, first_moment_residual});
}

MomentReport moment_consistency_check(const BathParams& raw, double beta_s0, const std::vector<double>& times) {
    const BathParams params = discordant_only(raw);
    const auto fp = heat_equation_coefficients(params);
    const auto k = dynamics::lindblad_rates(params);
    const auto c = dynamics::closed_form_coefficients(params);

    MomentReport r;
    // Jumps change m by 2: a_2 = 4 k at either pole.
    r.km_residual_excited = std::abs(fp.d_inversion(1.0) - 4.0 * k.kappa_1 / 2.0);
    r.km_residual_ground = std::abs(fp.d_inversion(-1.0) - 4.0 * k.kappa_2 / 2.0);
    r.rate_identity_residual = std::max(std::abs(fp.d_inversion_const - (k.kappa_1 + k.kappa_2)),
                                        std::abs(fp.d_inversion_slope - (k.kappa_1 - k.kappa_2)));

    Matrix excited = Matrix::Zero(2, 2), ground = Matrix::Zero(2, 2);
    excited(1, 1) = 1.0;
    ground(0, 0) = 1.0;
    const double drift_e = inversion(dynamics::generator_apply(excited, params));
    const double drift_g = inversion(dynamics::generator_apply(ground, params));
    r.relaxation_rate = -(drift_e - drift_g) / 2.0;
    r.decay_rate = c.decay_rate;
    r.relaxation_residual = std::abs(r.relaxation_rate - r.decay_rate);

    const double sum = k.kappa_1 + k.kappa_2;
    const double diff = k.kappa_2 - k.kappa_1;
    const auto q = gibbs_weights(beta_s0, params.qubit);
    const double m0 = q.excited - q.ground;
    const double m_inf = sum == 0.0 ? m0 : diff / sum;
    for (double t : times) {
        const Matrix rho = dynamics::analytic_state(t, beta_s0, params).matrix();
        const double m = inversion(rho);
        const double drift = inversion(dynamics::generator_apply(rho, params));
        r.drift_residual = std::max(r.drift_residual, std::abs(drift - (diff - sum * m)));
        const double ode = m_inf + (m0 - m_inf) * std::exp(-sum * t);
        r.first_moment_residual = std::max(r.first_moment_residual, std::abs(ode - m));
    }
    return r;
}

MomentReport moment_consistency_check(const BathParams& params) {
    std::vector<double> times;
    for (int i = 0; i <= 20; ++i) times.push_back(i * 10.0);
    return moment_consistency_check(params, params.beta_b * 0.8, times);
}

} // namespace qrayleigh::fpcheck
