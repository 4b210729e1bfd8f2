// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace starsec {

/// Cached trigonometric moments of the zero-mean von Mises phase error:
/// phi_p = I_p(kappa) / I_0(kappa).
struct PhaseErrorModel {
    double kappa = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;

    static PhaseErrorModel from_kappa(double kappa);
};

/// Moment-matched Gamma fit of a cascaded gain |sum ...|^2:
/// shape m_URS, mean Omega_URS (scale = mean / shape).
struct GammaApprox {
    double shape = 0.0;
    double mean = 0.0;
};

/// First/second-order statistics of the real and imaginary parts of the
/// coherent sum, in the unnormalized convention (sum over M elements with
/// sqrt(lambda) included).
struct RealPartStats {
    double mean_u = 0.0;
    double var_u = 0.0;
    double var_v = 0.0;
};

/// E|h| of a unit-spread Nakagami-m amplitude: Gamma(m+1/2)/(Gamma(m) sqrt(m)).
double nakagami_amplitude_mean(double m);

/// alpha = sqrt(E|h_UR| E|h_RS|), the per-element cascade amplitude factor.
double cascade_amplitude_factor(double m_ur, double m_rs);

RealPartStats real_part_stats(int elements, double lambda, double alpha,
                              const PhaseErrorModel& phase);

/// Gamma parameters of the cascaded legitimate gain:
/// shape = M a^4 phi1^2 / (2 (1 + phi2 - 2 a^4 phi1^2)), mean = M^2 lambda a^4 phi1^2.
/// Throws on a degenerate (deterministic) channel where the variance vanishes.
GammaApprox cascaded_gamma_params(int elements, double lambda, double alpha,
                                  const PhaseErrorModel& phase);

/// Mean of the exponentially distributed eavesdropper gain: M by default
/// (the literal model statement), M * lambda when lambda_scaled is set
/// (what the uniform-phase construction actually produces).
double eaves_exponential_mean(int elements, double lambda, bool lambda_scaled = false);

}  // namespace starsec
