// SPDX-License-Identifier: Apache-2.0
#include "starsec/fading_stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "starsec/numerics.hpp"

namespace starsec {

PhaseErrorModel PhaseErrorModel::from_kappa(double kappa) {
    PhaseErrorModel m;
    m.kappa = kappa;
    m.phi1 = trig_moment(1, kappa);
    m.phi2 = trig_moment(2, kappa);
    return m;
}

double nakagami_amplitude_mean(double m) {
    if (!(m >= 0.5))
        throw std::domain_error("nakagami_amplitude_mean: shape must be >= 0.5, got " +
                                std::to_string(m));
    // Gamma(m + 1/2) / Gamma(m) / sqrt(m), in log space to stay in range for
    // large shapes.
    return std::exp(ln_gamma(m + 0.5) - ln_gamma(m) - 0.5 * std::log(m));
}

double cascade_amplitude_factor(double m_ur, double m_rs) {
    return std::sqrt(nakagami_amplitude_mean(m_ur) * nakagami_amplitude_mean(m_rs));
}

namespace {

void require_sum_inputs(int elements, double lambda) {
    if (elements < 1)
        throw std::domain_error("element count must be >= 1, got " +
                                std::to_string(elements));
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::domain_error("lambda must lie in (0, 1), got " +
                                std::to_string(lambda));
}

// 1 + phi2 - 2 alpha^4 phi1^2, the variance factor of the real part. Zero or
// negative only for a degenerate deterministic channel.
double variance_factor(double alpha, const PhaseErrorModel& phase) {
    const double a4 = alpha * alpha * alpha * alpha;
    return 1.0 + phase.phi2 - 2.0 * a4 * phase.phi1 * phase.phi1;
}

}  // namespace

RealPartStats real_part_stats(int elements, double lambda, double alpha,
                              const PhaseErrorModel& phase) {
    require_sum_inputs(elements, lambda);
    const double a2 = alpha * alpha;
    const double vf = variance_factor(alpha, phase);
    if (!(vf > 0.0))
        throw std::domain_error(
            "real_part_stats: degenerate deterministic channel (variance factor " +
            std::to_string(vf) + ")");
    RealPartStats st;
    st.mean_u = elements * std::sqrt(lambda) * a2 * phase.phi1;
    st.var_u = 0.5 * elements * lambda * vf;
    st.var_v = 0.5 * elements * lambda * (1.0 - phase.phi2);
    return st;
}

GammaApprox cascaded_gamma_params(int elements, double lambda, double alpha,
                                  const PhaseErrorModel& phase) {
    require_sum_inputs(elements, lambda);
    const double a4 = alpha * alpha * alpha * alpha;
    const double coherent = a4 * phase.phi1 * phase.phi1;
    const double vf = variance_factor(alpha, phase);
    if (!(vf > 0.0))
        throw std::domain_error(
            "cascaded_gamma_params: degenerate deterministic channel; the Gamma fit "
            "is undefined (use the deterministic capacity directly)");
    if (!(coherent > 0.0))
        throw std::domain_error(
            "cascaded_gamma_params: incoherent phase limit (phi1 = 0, e.g. kappa = 0); "
            "the moment-matched fit collapses to zero mean and is undefined");
    GammaApprox g;
    g.shape = elements * coherent / (2.0 * vf);
    g.mean = static_cast<double>(elements) * elements * lambda * coherent;
    return g;
}

double eaves_exponential_mean(int elements, double lambda, bool lambda_scaled) {
    if (elements < 1)
        throw std::domain_error("element count must be >= 1, got " +
                                std::to_string(elements));
    return lambda_scaled ? elements * lambda : static_cast<double>(elements);
}

}  // namespace starsec
