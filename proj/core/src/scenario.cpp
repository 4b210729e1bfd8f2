// SPDX-License-Identifier: Apache-2.0
#include "starsec/scenario.hpp"

#include <cmath>
#include <sstream>

namespace starsec {

namespace {

bool finite_pos(const Position3D& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

Side opposite(Side s) {
    return s == Side::reflection ? Side::transmission : Side::reflection;
}

std::string side_name(Side s) {
    return s == Side::reflection ? "r" : "t";
}

ScenarioError::ScenarioError(std::vector<ValidationIssue> issues)
    : std::runtime_error([&issues] {
          std::string msg = "scenario validation failed:";
          for (const auto& i : issues) msg += "\n  [" + i.constraint + "] " + i.detail;
          return msg;
      }()),
      issues_(std::move(issues)) {}

double distance(const Position3D& a, const Position3D& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

double path_loss(double distance_m, double beta_db, double exponent) {
    if (!(distance_m > 0.0))
        throw std::domain_error("path_loss: distance must be > 0 (co-located endpoints?)");
    return std::pow(10.0, beta_db / 10.0) * std::pow(distance_m, -exponent);
}

double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }

std::vector<ValidationIssue> validate_scenario(const ScenarioConfig& s) {
    std::vector<ValidationIssue> out;
    const auto bad = [&out](const std::string& id, const std::string& detail) {
        out.push_back({id, detail});
    };

    for (const auto* p : {&s.ap, &s.uav, &s.node_r, &s.node_t, &s.eave_r, &s.eave_t})
        if (!finite_pos(*p)) {
            bad("positions_finite", "a position contains a non-finite coordinate");
            break;
        }

    if (std::abs(s.lambda_r + s.lambda_t - 1.0) > 1e-12)
        bad("es_conservation", "lambda_r + lambda_t = " + fmt(s.lambda_r + s.lambda_t) +
                                   ", must equal 1");
    if (!(s.lambda_r > 0.0 && s.lambda_r < 1.0))
        bad("lambda_range_48f", "lambda_r = " + fmt(s.lambda_r) + ", must lie in (0, 1)");
    if (!(s.lambda_t > 0.0 && s.lambda_t < 1.0))
        bad("lambda_range_48f", "lambda_t = " + fmt(s.lambda_t) + ", must lie in (0, 1)");

    if (std::abs(s.w1 + s.w2 - 1.0) > 1e-12)
        bad("weights_sum_48e", "w1 + w2 = " + fmt(s.w1 + s.w2) + ", must equal 1");
    if (!(s.w1 >= 0.0 && s.w1 <= 1.0) || !(s.w2 >= 0.0 && s.w2 <= 1.0))
        bad("weights_range_48e", "w1 = " + fmt(s.w1) + ", w2 = " + fmt(s.w2) +
                                     ", each must lie in [0, 1]");

    for (const auto& [name, p] : {std::pair<const char*, double>{"power_r_dbm", s.power_r_dbm},
                                  {"power_t_dbm", s.power_t_dbm}}) {
        if (!std::isfinite(p) || p > s.power_max_dbm + 1e-12)
            bad("power_bound_48d", std::string(name) + " = " + fmt(p) +
                                       " exceeds power_max_dbm = " + fmt(s.power_max_dbm));
    }

    if (s.elements < 1)
        bad("elements_positive", "elements = " + std::to_string(s.elements) + ", must be >= 1");
    if (!(s.m_ur >= 0.5))
        bad("nakagami_shape", "m_ur = " + fmt(s.m_ur) + ", must be >= 0.5");
    if (!(s.m_rs >= 0.5))
        bad("nakagami_shape", "m_rs = " + fmt(s.m_rs) + ", must be >= 0.5");
    if (std::abs(s.omega - 1.0) > 1e-12)
        bad("unit_spread", "omega = " + fmt(s.omega) +
                               "; only unit spread is supported by the statistics");
    if (!(s.kappa >= 0.0) || !std::isfinite(s.kappa))
        bad("kappa_nonneg", "kappa = " + fmt(s.kappa) + ", must be finite and >= 0");
    if (!(s.path_loss_exponent > 0.0))
        bad("path_loss_exponent", "a = " + fmt(s.path_loss_exponent) + ", must be > 0");
    if (!std::isfinite(s.beta_db))
        bad("beta_finite", "beta_db is not finite");
    if (!std::isfinite(s.noise_dbm))
        bad("noise_finite", "noise_dbm is not finite");
    return out;
}

void require_valid(const ScenarioConfig& s) {
    auto issues = validate_scenario(s);
    if (!issues.empty()) throw ScenarioError(std::move(issues));
}

double node_power_dbm(const ScenarioConfig& s, Side side) {
    return side == Side::reflection ? s.power_r_dbm : s.power_t_dbm;
}

double lambda_of(const ScenarioConfig& s, Side side) {
    return side == Side::reflection ? s.lambda_r : s.lambda_t;
}

const Position3D& node_of(const ScenarioConfig& s, Side side) {
    return side == Side::reflection ? s.node_r : s.node_t;
}

const Position3D& eave_of(const ScenarioConfig& s, Side side) {
    return side == Side::reflection ? s.eave_r : s.eave_t;
}

LinkBudget link_budget(const ScenarioConfig& s) {
    const Side q = s.decode_first;
    const Side qp = opposite(q);

    const double d_q_uav = distance(node_of(s, q), s.uav);
    const double d_qp_uav = distance(node_of(s, qp), s.uav);
    const double d_uav_ap = distance(s.uav, s.ap);
    // Side q's signal is intercepted by the idle node on the opposite side.
    const double d_uav_eq = distance(s.uav, eave_of(s, qp));
    const double d_uav_eqp = distance(s.uav, eave_of(s, q));
    for (double d : {d_q_uav, d_qp_uav, d_uav_ap, d_uav_eq, d_uav_eqp})
        if (!(d > 0.0))
            throw std::domain_error("link_budget: UAV co-located with an endpoint");

    const double a = s.path_loss_exponent;
    const double n0 = dbm_to_linear(s.noise_dbm);
    const double p_q = dbm_to_linear(node_power_dbm(s, q));
    const double p_qp = dbm_to_linear(node_power_dbm(s, qp));

    LinkBudget lb;
    lb.rho_s_q = p_q * path_loss(d_q_uav, s.beta_db, a) * path_loss(d_uav_ap, s.beta_db, a) / n0;
    lb.rho_s_qp = p_qp * path_loss(d_qp_uav, s.beta_db, a) * path_loss(d_uav_ap, s.beta_db, a) / n0;
    lb.rho_e_q = p_q * path_loss(d_q_uav, s.beta_db, a) * path_loss(d_uav_eq, s.beta_db, a) / n0;
    lb.rho_e_qp = p_qp * path_loss(d_qp_uav, s.beta_db, a) * path_loss(d_uav_eqp, s.beta_db, a) / n0;
    return lb;
}

}  // namespace starsec
