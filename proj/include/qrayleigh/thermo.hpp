// thermo.hpp: Temperatures, heat and coherence currents, entropy production
// and thermocoherent Onsager coefficients

#pragma once

#include "qrayleigh/qmath.hpp"
#include "qrayleigh/states.hpp"

namespace qrayleigh::thermo {

using qmath::DensityMatrix;

// beta (E_e - E_g) <= 0.1.
inline constexpr double kHighTemperatureCutoff = 0.1;
bool is_high_temperature(double beta, const QubitSpec& spec);

// T = (E_g - E_e) / ln(rho_ee / rho_gg). Equal populations give +infinity.
double temperature_of(const DensityMatrix& rho, const QubitSpec& spec);
// ln(rho_gg / rho_ee) / (E_e - E_g); zero for equal populations.
double inverse_temperature_of(const DensityMatrix& rho, const QubitSpec& spec);

double steady_temperature(const BathParams& params);
double steady_inverse_temperature(const BathParams& params);

/// Coherence-potential and temperature differences. Every sign convention of
/// the thermocoherent relations lives here.
namespace potentials {
// beta_S(0) - beta_B
double transient_delta_beta(double beta_s0, double beta_b);
// alpha (0 - 2 lambda)
double transient_delta_c(double alpha, double lambda);
// beta_B' - beta_B
double two_bath_delta_beta(double beta_b1, double beta_b2);
// 2 alpha (lambda' - lambda)
double two_bath_delta_c(double alpha, double lambda1, double lambda2);
// (beta_B + beta_B') / (2 (1 + alpha lambda + alpha lambda'))
double two_bath_beta_infinity(double alpha, double beta_b1, double lambda1, double beta_b2, double lambda2);
} // namespace potentials

// J_0 in J(t) = J_0 gamma(t); positive when heat flows from the bath into the qubit.
double heat_current_amplitude(double beta_s0, const BathParams& params);
double heat_current(double t, double beta_s0, const BathParams& params);

struct AnomalousCurrent {
    double value{0.0};
    bool applicable{false}; // false for non-discordant families (value is then exactly 0)
};

// Heat current at beta_S(0) = beta_B.
AnomalousCurrent anomalous_heat_current(double t, const BathParams& params);

struct EntropyProduction {
    double production{0.0};   // Pi
    double entropy_rate{0.0}; // d S_vN / dt
    double entropy_flux{0.0}; // Phi, with Pi = dS/dt + Phi
};

EntropyProduction entropy_production(double t, double beta_s0, const BathParams& params);

// -tr[rho_dot (ln rho - ln rho_inf)] for full-rank states.
EntropyProduction entropy_production_from(const Matrix& rho, const Matrix& rho_dot, const Matrix& rho_inf);

struct CurrentRecord {
    double t{0.0};
    double heat{0.0};
    double coherence{0.0};
    double entropy_production{0.0};
    double entropy_flux{0.0};
    double temperature{0.0};
};

CurrentRecord current_record(double t, double beta_s0, const BathParams& params);

// J_c(t) from -J_c = gamma (L_ch dbeta - L_cc beta_S(0) dC). With
// require_high_t the call rejects configurations outside the linear regime.
double coherence_current(double t, double beta_s0, const BathParams& params, bool require_high_t = false);

enum class OnsagerRegime { TransientHighT, TwoBathSteadyHighT };

struct OnsagerMatrix {
    double l_hh{0.0};
    double l_hc{0.0};
    double l_ch{0.0};
    double l_cc{0.0};
    OnsagerRegime regime{OnsagerRegime::TransientHighT};
    double delta_beta{0.0};
    double delta_c{0.0};
};

OnsagerMatrix onsager_coefficients(const BathParams& params, double beta_s0);
OnsagerMatrix onsager_coefficients(const BathParams& bath1, const BathParams& bath2);

struct NumericOnsager {
    OnsagerMatrix matrix;
    double nonlinearity{0.0};
    bool nonlinear_regime{false}; // nonlinearity above 5%
};

/// Linear-response extraction around `base` (beta_S(0) = beta_B) from the
/// brute-force collision generator. Forces are X_b = dbeta and X_c = -beta_S(0) dC.
/// The heat row is the gradient of the exact heat current; the coherence row
/// is the flux conjugate to X_c in the exact entropy production.
NumericOnsager extract_onsager_numeric(const BathParams& base, double delta_beta_step, double delta_c_step);

struct TwoBathSteady {
    DensityMatrix state = DensityMatrix::trusted(Matrix::Identity(2, 2) * 0.5);
    double beta_infinity{0.0};        // exact, from the generator balance
    double beta_infinity_formula{0.0}; // high-temperature closed form
    double j_h_bath1{0.0};
    double j_h_bath2{0.0};
    double j_c{0.0};
    double pi{0.0};
};

TwoBathSteady two_bath_steady(const BathParams& bath1, const BathParams& bath2);

// Heat current from bath 1 in the linear form L_hh dbeta - L_hc beta_inf dC.
double two_bath_heat_current_linear(const BathParams& bath1, const BathParams& bath2);

} // namespace qrayleigh::thermo
