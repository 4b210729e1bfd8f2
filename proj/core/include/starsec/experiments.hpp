// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "starsec/monte_carlo.hpp"
#include "starsec/optimizer.hpp"
#include "starsec/scenario.hpp"

namespace starsec {

/// Locale-independent numeric formatting with 12 significant digits; the
/// single formatter behind every CSV/JSON number the runners emit.
std::string format_double(double v);

struct PowerSweepSpec {
    double start_dbm = 0.0;
    double stop_dbm = 23.0;
    double step_db = 1.0;
    std::vector<double> kappas{2.0, 8.0, 50.0};
    Side side = Side::reflection;
    bool with_mc = false;
    McSettings mc;
};

/// One row per power level; both nodes transmit at the row power. Columns:
/// power_dbm, then per kappa the analytic secrecy rate of the requested
/// side, then per kappa the Monte Carlo estimate and its standard error
/// when with_mc is set.
std::string run_sweep_power(const ScenarioConfig& base, const PowerSweepSpec& spec,
                            const QuadratureRule& rule);

struct ElementSweepSpec {
    int start = 10;
    int stop = 100;
    int step = 5;
    std::vector<double> powers_dbm{10.0, 15.0, 20.0};
    Side side = Side::reflection;
};

/// One row per element count M; columns: elements, then the analytic secrecy
/// rate of the requested side per power level (both nodes at that power).
std::string run_sweep_elements(const ScenarioConfig& base, const ElementSweepSpec& spec,
                               const QuadratureRule& rule);

/// Analytic-vs-Monte-Carlo validation report: per-quantity gaps, the
/// moment diagnostics of A/B/C, the eavesdropper mean-variant comparison,
/// the Gamma goodness-of-fit distance, and the X/Y-independence diagnostic.
nlohmann::json run_validate(const ScenarioConfig& s, const McSettings& mc,
                            const QuadratureRule& rule);

struct OptimizeSpec {
    SearchRegion region;
    double eps0 = 1e-6;
    int k_max = 50;
    double power_start_dbm = 0.0;
    double power_stop_dbm = 23.0;
    double power_step_db = 1.0;
};

struct OptimizeOutput {
    GridSearchResult placement;      // at the scenario's configured powers
    nlohmann::json placement_json;
    std::string power_csv;           // power_dbm, wssr_fixed, wssr_optimized
};

OptimizeOutput run_optimize(const ScenarioConfig& base, const OptimizeSpec& spec,
                            const QuadratureRule& rule);

/// CSV of the full WSSR surface: columns x, y, wssr; row-major.
std::string run_surface_csv(const ScenarioConfig& s, const SearchRegion& region,
                            const QuadratureRule& rule);

nlohmann::json grid_search_result_to_json(const GridSearchResult& r);

}  // namespace starsec
