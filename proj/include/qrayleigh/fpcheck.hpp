// fpcheck.hpp: Heat-equation coefficients of the phase-space description and
// their Kramers-Moyal check against the two-state jump process

#pragma once

#include <vector>

#include "qrayleigh/states.hpp"

namespace qrayleigh::fpcheck {

/// Coefficients of the truncated heat equation for one discordant bath.
/// m is the inversion (+1 excited, -1 ground). Every coefficient includes
/// the arrival rate and splits into a thermal part and an alpha*lambda part.
struct FPCoefficients {
    double d_polarization{0.0};    // (p_e + alpha lambda) eta / alpha
    double drift_coupling{0.0};    // -2 d_polarization
    double d_inversion_const{0.0}; // (1 + 2 alpha lambda) eta / alpha
    double d_inversion_slope{0.0}; // (p_g - p_e) eta / alpha

    double d_polarization_thermal{0.0};
    double d_polarization_coherent{0.0};
    double d_inversion_const_thermal{0.0};
    double d_inversion_const_coherent{0.0};

    // Inversion diffusion at inversion m.
    double d_inversion(double m) const { return d_inversion_const + m * d_inversion_slope; }
};

FPCoefficients heat_equation_coefficients(const BathParams& params);

struct MomentReport {
    // |D_m(+-1) - a_2/2| with a_2 = (jump size)^2 x jump rate of the Lindblad process.
    double km_residual_excited{0.0};
    double km_residual_ground{0.0};
    // Affine-coefficient identities const = k1 + k2, slope = k1 - k2.
    double rate_identity_residual{0.0};
    // d<m>/dt from the collision generator vs (k2 - k1) - (k1 + k2) <m>.
    double drift_residual{0.0};
    double relaxation_rate{0.0}; // read off the generator
    double decay_rate{0.0};      // closed form
    double relaxation_residual{0.0};
    // First-moment ODE solution vs the closed-form population difference.
    double first_moment_residual{0.0};

    double max_residual() const;
};

// Evaluated on `times` along the closed-form trajectory from beta_s0.
MomentReport moment_consistency_check(const BathParams& params, double beta_s0, const std::vector<double>& times);
MomentReport moment_consistency_check(const BathParams& params);

} // namespace qrayleigh::fpcheck
