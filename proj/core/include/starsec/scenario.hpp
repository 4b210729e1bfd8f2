// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace starsec {

struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Which side of the surface is decoded first under SIC. The decoded-first
/// side sees the other active node as interference; the other side is
/// interference-free after cancellation.
enum class Side { reflection, transmission };

Side opposite(Side s);
std::string side_name(Side s);

/// Full system description. Powers enter in dBm and are converted to linear
/// once inside link_budget; all other fields are linear/SI.
struct ScenarioConfig {
    Position3D ap{0.0, 0.0, 10.0};
    Position3D uav{50.0, 50.0, 100.0};
    Position3D node_r{75.0, -25.0, 0.0};   // active node, reflection side
    Position3D node_t{125.0, 75.0, 0.0};   // active node, transmission side
    Position3D eave_r{50.0, 25.0, 0.0};    // idle (malicious) node, reflection side
    Position3D eave_t{25.0, 75.0, 0.0};    // idle (malicious) node, transmission side

    double power_r_dbm = 23.0;
    double power_t_dbm = 23.0;
    double power_max_dbm = 23.0;
    double noise_dbm = -100.0;

    int elements = 40;                     // M
    double lambda_r = 0.5;                 // ES split toward the reflection side
    double lambda_t = 0.5;
    double m_ur = 2.0;                     // Nakagami shape, node->surface hops
    double m_rs = 2.0;                     // Nakagami shape, surface->receiver hops
    double omega = 1.0;                    // spread; only 1 is supported
    double kappa = 5.0;                    // von Mises concentration
    double path_loss_exponent = 2.7;       // a
    double beta_db = -20.0;                // reference loss at 1 m

    double w1 = 0.5;                       // weight of the decoded-first side
    double w2 = 0.5;
    Side decode_first = Side::reflection;

    // Mean of the eavesdropper gain: M (the literal model statement) or
    // M * lambda (what the uniform-phase construction actually yields).
    bool eaves_mean_lambda_scaled = false;
};

/// The four composite SNR scale factors (linear, dimensionless):
/// rho_{s,q}, rho_{s,q'}, rho_{e,q}, rho_{e,q'} where q is the decoded-first
/// side. The eavesdropper of side q's signal is the idle node on side q'.
struct LinkBudget {
    double rho_s_q = 0.0;
    double rho_s_qp = 0.0;
    double rho_e_q = 0.0;
    double rho_e_qp = 0.0;
};

struct ValidationIssue {
    std::string constraint;  // stable identifier, e.g. "es_conservation"
    std::string detail;
};

class ScenarioError : public std::runtime_error {
  public:
    explicit ScenarioError(std::vector<ValidationIssue> issues);
    const std::vector<ValidationIssue>& issues() const { return issues_; }

  private:
    std::vector<ValidationIssue> issues_;
};

double distance(const Position3D& a, const Position3D& b);

/// Large-scale path loss beta * d^{-a} as a linear gain; beta given in dB.
double path_loss(double distance_m, double beta_db, double exponent);

double dbm_to_linear(double dbm);

/// All invariant violations at once; empty means the scenario is valid.
std::vector<ValidationIssue> validate_scenario(const ScenarioConfig& s);

/// Throws ScenarioError listing every violation.
void require_valid(const ScenarioConfig& s);

LinkBudget link_budget(const ScenarioConfig& s);

// Per-side accessors resolving the q / q' roles from decode_first.
double node_power_dbm(const ScenarioConfig& s, Side side);
double lambda_of(const ScenarioConfig& s, Side side);
const Position3D& node_of(const ScenarioConfig& s, Side side);
const Position3D& eave_of(const ScenarioConfig& s, Side side);

}  // namespace starsec
