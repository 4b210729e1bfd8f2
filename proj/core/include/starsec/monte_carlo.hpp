// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "starsec/analytic_rates.hpp"
#include "starsec/scenario.hpp"

namespace starsec {

struct McSettings {
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
};

/// Deterministic per-trial random stream: xoshiro256++ state derived from
/// (seed, stream index) via splitmix64, so results never depend on how
/// trials are scheduled across workers.
class TrialRng {
  public:
    TrialRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double uniform01();                    // in (0, 1]
    double uniform(double a, double b);
    double normal();
    double gamma(double shape);            // unit scale, Marsaglia-Tsang
    double nakagami(double m, double omega);
    double von_mises(double kappa);        // Best-Fisher rejection, in [-pi, pi]

  private:
    std::uint64_t s_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

struct McMoments {
    McEstimate mean_a;
    McEstimate mean_b;
    McEstimate mean_c_q;
    McEstimate mean_c_qp;
};

struct McReport {
    SecrecyReport rates;  // means with the secrecy clamps applied
    McEstimate c_q, c_qp, c_e_q, c_e_qp;
    McEstimate r_sec_q, r_sec_qp;  // std_error of the pre-clamp difference
    McEstimate wssr;
    McMoments moments;
    /// Diagnostic for the X/Y-independence step of the analysis: the
    /// decoded-first rate re-estimated with A and B sharing the surface->AP
    /// hop draws, as the physical model has it.
    McEstimate c_q_shared_rs;
};

/// Brute-force oracle per the instantaneous-SNR construction: per trial,
/// fresh Nakagami amplitudes for both hops of both active nodes (the
/// surface->AP hop drawn independently per side, matching the analysis'
/// independence assumption), one eavesdropper-hop amplitude set per side
/// reusing the node->surface draws, independent von Mises errors for A and
/// B, and uniform composite phases for the eavesdropper gains.
McReport simulate_rates(const ScenarioConfig& s, const McSettings& mc);

/// Samples of the cascaded legitimate gain (the |sum|^2 construction) for
/// one side; used for moment and goodness-of-fit checks.
std::vector<double> cascaded_gain_samples(const ScenarioConfig& s, Side side,
                                          std::int64_t count, std::uint64_t seed,
                                          int workers = 1);

/// Kolmogorov-Smirnov distance between a sample and Gamma(shape, mean/shape).
double ks_distance_gamma(std::vector<double> sample, double shape, double mean);

}  // namespace starsec
