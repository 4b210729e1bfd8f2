// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "starsec/numerics.hpp"
#include "starsec/scenario.hpp"

namespace starsec {

/// Laplace-domain MGF M_X(z) = E[e^{-zX}] of a scaled fading gain.
/// gamma: X = rho * A with A ~ Gamma(shape, mean), scaled_mean = mean * rho.
/// exponential: X = rho * C with C ~ Exp(mean), scaled_mean = mean * rho.
struct MgfSpec {
    enum class Kind { gamma, exponential };

    Kind kind = Kind::exponential;
    double shape = 1.0;        // gamma only
    double scaled_mean = 0.0;  // >= 0; zero means "no signal"

    static MgfSpec gamma_gain(double shape, double scaled_mean);
    static MgfSpec exponential_gain(double scaled_mean);
};

double mgf_eval(const MgfSpec& spec, double z);

/// 1 - M(z) evaluated without cancellation for small z * scaled_mean.
double one_minus_mgf(const MgfSpec& spec, double z);

/// Ergodic capacity in bpcu of the decoded-first (interference-limited) link:
/// (1/ln 2) sum_l W_l M_Y(Z_l) (1 - M_X(Z_l)) / Z_l.
double capacity_interference_limited(const MgfSpec& x, const MgfSpec& y,
                                     const QuadratureRule& rule);

/// Ergodic capacity in bpcu of an interference-free link:
/// (1/ln 2) sum_l W_l (1 - M_Y(Z_l)) / Z_l.
double capacity_single(const MgfSpec& y, const QuadratureRule& rule);

// Adaptive-integration versions of the two capacities; the independent
// cross-check path for the Laguerre closed forms.
double capacity_interference_limited_adaptive(const MgfSpec& x, const MgfSpec& y,
                                              double abs_tol = 1e-10);
double capacity_single_adaptive(const MgfSpec& y, double abs_tol = 1e-10);

/// [c_legit - c_eave]^+
double secrecy_rate(double c_legit, double c_eave);

enum class RateMethod { analytic, monte_carlo };

/// Per-side ergodic capacities, eavesdropper capacities, secrecy rates, and
/// the weighted sum secrecy rate. The q suffix is the decoded-first side.
struct SecrecyReport {
    double c_q = 0.0;
    double c_qp = 0.0;
    double c_e_q = 0.0;
    double c_e_qp = 0.0;
    double r_sec_q = 0.0;
    double r_sec_qp = 0.0;
    double r_sum = 0.0;
    double wssr = 0.0;
    RateMethod method = RateMethod::analytic;
};

/// The MGF specs implied by a scenario, exposed so the Monte Carlo and
/// validation paths can reuse the exact same construction.
struct ScenarioSpecs {
    LinkBudget budget;
    MgfSpec x;      // rho_{s,q} A
    MgfSpec y;      // rho_{s,q'} B
    MgfSpec e_q;    // rho_{e,q} C
    MgfSpec e_qp;   // rho_{e,q'} C'
};

ScenarioSpecs scenario_specs(const ScenarioConfig& s);

SecrecyReport evaluate_scenario(const ScenarioConfig& s, const QuadratureRule& rule);

/// Same composition through the adaptive integrator.
SecrecyReport evaluate_scenario_adaptive(const ScenarioConfig& s);

std::string rate_method_name(RateMethod m);

}  // namespace starsec
