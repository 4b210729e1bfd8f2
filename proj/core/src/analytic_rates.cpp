// SPDX-License-Identifier: Apache-2.0
#include "starsec/analytic_rates.hpp"

#include <cmath>
#include <stdexcept>

#include "starsec/fading_stats.hpp"

namespace starsec {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

void require_spec(const MgfSpec& s) {
    if (!(s.scaled_mean >= 0.0) || !std::isfinite(s.scaled_mean))
        throw std::domain_error("MgfSpec: scaled_mean must be finite and >= 0");
    if (s.kind == MgfSpec::Kind::gamma && !(s.shape > 0.0))
        throw std::domain_error("MgfSpec: gamma shape must be > 0");
}

}  // namespace

MgfSpec MgfSpec::gamma_gain(double shape, double scaled_mean) {
    MgfSpec s;
    s.kind = Kind::gamma;
    s.shape = shape;
    s.scaled_mean = scaled_mean;
    require_spec(s);
    return s;
}

MgfSpec MgfSpec::exponential_gain(double scaled_mean) {
    MgfSpec s;
    s.kind = Kind::exponential;
    s.scaled_mean = scaled_mean;
    require_spec(s);
    return s;
}

double mgf_eval(const MgfSpec& spec, double z) {
    if (!(z >= 0.0)) throw std::domain_error("mgf_eval: z must be >= 0");
    if (spec.kind == MgfSpec::Kind::gamma)
        return std::exp(-spec.shape * std::log1p(z * spec.scaled_mean / spec.shape));
    return 1.0 / (1.0 + z * spec.scaled_mean);
}

double one_minus_mgf(const MgfSpec& spec, double z) {
    if (!(z >= 0.0)) throw std::domain_error("one_minus_mgf: z must be >= 0");
    if (spec.kind == MgfSpec::Kind::gamma)
        return -std::expm1(-spec.shape * std::log1p(z * spec.scaled_mean / spec.shape));
    const double u = z * spec.scaled_mean;
    return u / (1.0 + u);
}

double capacity_interference_limited(const MgfSpec& x, const MgfSpec& y,
                                     const QuadratureRule& rule) {
    require_spec(x);
    require_spec(y);
    double sum = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        const double z = rule.nodes[i];
        sum += rule.weights[i] * mgf_eval(y, z) * one_minus_mgf(x, z) / z;
    }
    return sum / kLn2;
}

double capacity_single(const MgfSpec& y, const QuadratureRule& rule) {
    require_spec(y);
    double sum = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        const double z = rule.nodes[i];
        sum += rule.weights[i] * one_minus_mgf(y, z) / z;
    }
    return sum / kLn2;
}

double capacity_interference_limited_adaptive(const MgfSpec& x, const MgfSpec& y,
                                              double abs_tol) {
    require_spec(x);
    require_spec(y);
    const auto r = integrate_exp_weighted_adaptive(
        [&](double z) { return mgf_eval(y, z) * one_minus_mgf(x, z) / z; }, abs_tol);
    return r.value / kLn2;
}

double capacity_single_adaptive(const MgfSpec& y, double abs_tol) {
    require_spec(y);
    const auto r = integrate_exp_weighted_adaptive(
        [&](double z) { return one_minus_mgf(y, z) / z; }, abs_tol);
    return r.value / kLn2;
}

double secrecy_rate(double c_legit, double c_eave) {
    if (!(c_legit >= 0.0) || !(c_eave >= 0.0))
        throw std::domain_error("secrecy_rate: capacities must be >= 0");
    return std::max(c_legit - c_eave, 0.0);
}

ScenarioSpecs scenario_specs(const ScenarioConfig& s) {
    require_valid(s);
    const Side q = s.decode_first;
    const Side qp = opposite(q);
    const double alpha = cascade_amplitude_factor(s.m_ur, s.m_rs);
    const auto phase = PhaseErrorModel::from_kappa(s.kappa);

    const GammaApprox ga = cascaded_gamma_params(s.elements, lambda_of(s, q), alpha, phase);
    const GammaApprox gb = cascaded_gamma_params(s.elements, lambda_of(s, qp), alpha, phase);
    // Side q's signal travels toward side q' where its eavesdropper sits, so
    // the split coefficient inside the eavesdropper gain is lambda_{q'}.
    const double mean_c_q =
        eaves_exponential_mean(s.elements, lambda_of(s, qp), s.eaves_mean_lambda_scaled);
    const double mean_c_qp =
        eaves_exponential_mean(s.elements, lambda_of(s, q), s.eaves_mean_lambda_scaled);

    ScenarioSpecs specs;
    specs.budget = link_budget(s);
    specs.x = MgfSpec::gamma_gain(ga.shape, ga.mean * specs.budget.rho_s_q);
    specs.y = MgfSpec::gamma_gain(gb.shape, gb.mean * specs.budget.rho_s_qp);
    specs.e_q = MgfSpec::exponential_gain(mean_c_q * specs.budget.rho_e_q);
    specs.e_qp = MgfSpec::exponential_gain(mean_c_qp * specs.budget.rho_e_qp);
    return specs;
}

namespace {

SecrecyReport assemble_report(const ScenarioConfig& s, double c_q, double c_qp,
                              double c_e_q, double c_e_qp) {
    SecrecyReport r;
    r.c_q = c_q;
    r.c_qp = c_qp;
    r.c_e_q = c_e_q;
    r.c_e_qp = c_e_qp;
    r.r_sec_q = secrecy_rate(c_q, c_e_q);
    r.r_sec_qp = secrecy_rate(c_qp, c_e_qp);
    r.r_sum = r.r_sec_q + r.r_sec_qp;
    r.wssr = s.w1 * r.r_sec_q + s.w2 * r.r_sec_qp;
    r.method = RateMethod::analytic;
    return r;
}

}  // namespace

SecrecyReport evaluate_scenario(const ScenarioConfig& s, const QuadratureRule& rule) {
    const ScenarioSpecs specs = scenario_specs(s);
    return assemble_report(s, capacity_interference_limited(specs.x, specs.y, rule),
                           capacity_single(specs.y, rule),
                           capacity_single(specs.e_q, rule),
                           capacity_single(specs.e_qp, rule));
}

SecrecyReport evaluate_scenario_adaptive(const ScenarioConfig& s) {
    const ScenarioSpecs specs = scenario_specs(s);
    return assemble_report(s, capacity_interference_limited_adaptive(specs.x, specs.y),
                           capacity_single_adaptive(specs.y),
                           capacity_single_adaptive(specs.e_q),
                           capacity_single_adaptive(specs.e_qp));
}

std::string rate_method_name(RateMethod m) {
    return m == RateMethod::analytic ? "analytic" : "monte-carlo";
}

}  // namespace starsec
