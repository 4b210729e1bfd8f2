// SPDX-License-Identifier: Apache-2.0
//
// star-secrecy: experiment front end. Loads a scenario JSON (built-in
// defaults for absent fields), runs one experiment, and writes CSV/JSON
// suitable for regenerating the reference curves.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starsec/experiments.hpp"
#include "starsec/scenario_io.hpp"

using namespace starsec;

namespace {

struct CommonArgs {
    std::string scenario_path;
    std::string out_path;
    std::vector<std::string> overrides;
    int laguerre_order = kDefaultLaguerreOrder;
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string side = "r";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_mc_opts, bool with_side) {
    cmd->add_option("--scenario", args.scenario_path,
                    "Scenario JSON; absent fields fall back to the built-in defaults");
    cmd->add_option("--out", args.out_path, "Output path")->required();
    cmd->add_option("--set", args.overrides,
                    "Override a scenario field, key=value (repeatable)");
    cmd->add_option("--laguerre-order", args.laguerre_order,
                    "Gauss-Laguerre order for the closed forms")
        ->check(CLI::Range(1, kMaxLaguerreOrder));
    if (with_mc_opts) {
        cmd->add_option("--trials", args.trials, "Monte Carlo trials")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", args.seed, "Monte Carlo seed");
        cmd->add_option("--workers", args.workers, "Monte Carlo worker threads")
            ->check(CLI::PositiveNumber);
    }
    if (with_side)
        cmd->add_option("--side", args.side, "Which side's secrecy rate to report")
            ->check(CLI::IsMember({"r", "t"}));
}

ScenarioConfig load_with_overrides(const CommonArgs& args) {
    nlohmann::json doc = nlohmann::json::object();
    if (!args.scenario_path.empty()) {
        std::ifstream in(args.scenario_path);
        if (!in)
            throw std::invalid_argument("cannot open scenario file '" +
                                        args.scenario_path + "'");
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument("scenario file '" + args.scenario_path +
                                        "': " + e.what());
        }
    }
    for (const auto& kv : args.overrides) apply_override(doc, kv);
    ScenarioConfig s = scenario_from_json(doc);
    require_valid(s);
    return s;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

Side parse_side(const std::string& s) {
    return s == "t" ? Side::transmission : Side::reflection;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy-rate engine for a UAV-mounted dual-sided surface uplink"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* sweep_power = app.add_subcommand(
        "sweep-power", "Secrecy rate vs transmit power, one curve per kappa");
    PowerSweepSpec power_spec;
    add_common(sweep_power, args, true, true);
    sweep_power->add_option("--start", power_spec.start_dbm, "First power (dBm)");
    sweep_power->add_option("--stop", power_spec.stop_dbm, "Last power (dBm)");
    sweep_power->add_option("--step", power_spec.step_db, "Power step (dB)");
    sweep_power->add_option("--kappas", power_spec.kappas, "Concentration values");
    sweep_power->add_flag("--with-mc", power_spec.with_mc,
                          "Add Monte Carlo estimate and standard-error columns");

    auto* sweep_elements = app.add_subcommand(
        "sweep-elements", "Secrecy rate vs element count, one curve per power");
    ElementSweepSpec elem_spec;
    add_common(sweep_elements, args, false, true);
    sweep_elements->add_option("--start", elem_spec.start, "First element count");
    sweep_elements->add_option("--stop", elem_spec.stop, "Last element count");
    sweep_elements->add_option("--step", elem_spec.step, "Element step");
    sweep_elements->add_option("--powers", elem_spec.powers_dbm, "Power levels (dBm)");

    auto* validate = app.add_subcommand(
        "validate", "Analytic vs Monte Carlo report with moment diagnostics");
    add_common(validate, args, true, false);

    auto* optimize = app.add_subcommand(
        "optimize-placement",
        "Coordinate grid search for the UAV position; writes <out>.json and <out>.csv");
    OptimizeSpec opt_spec;
    add_common(optimize, args, false, false);
    optimize->add_option("--xmin", opt_spec.region.x_min, "Region x minimum (m)");
    optimize->add_option("--xmax", opt_spec.region.x_max, "Region x maximum (m)");
    optimize->add_option("--ymin", opt_spec.region.y_min, "Region y minimum (m)");
    optimize->add_option("--ymax", opt_spec.region.y_max, "Region y maximum (m)");
    optimize->add_option("--grid-step", opt_spec.region.step, "Grid step (m)");
    optimize->add_option("--eps0", opt_spec.eps0, "Convergence threshold (m)");
    optimize->add_option("--kmax", opt_spec.k_max, "Iteration cap");
    optimize->add_option("--pstart", opt_spec.power_start_dbm, "Sweep start power (dBm)");
    optimize->add_option("--pstop", opt_spec.power_stop_dbm, "Sweep stop power (dBm)");
    optimize->add_option("--pstep", opt_spec.power_step_db, "Sweep power step (dB)");

    auto* surface = app.add_subcommand(
        "surface", "Dense WSSR grid over the UAV's horizontal position");
    SearchRegion surf_region;
    add_common(surface, args, false, false);
    surface->add_option("--xmin", surf_region.x_min, "Region x minimum (m)");
    surface->add_option("--xmax", surf_region.x_max, "Region x maximum (m)");
    surface->add_option("--ymin", surf_region.y_min, "Region y minimum (m)");
    surface->add_option("--ymax", surf_region.y_max, "Region y maximum (m)");
    surface->add_option("--grid-step", surf_region.step, "Grid step (m)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help exits 0; anything malformed counts as a validation error.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const ScenarioConfig s = load_with_overrides(args);
        const QuadratureRule rule = laguerre_rule(args.laguerre_order);

        if (sweep_power->parsed()) {
            power_spec.side = parse_side(args.side);
            power_spec.mc = {args.trials, args.seed, args.workers};
            write_file(args.out_path, run_sweep_power(s, power_spec, rule));
        } else if (sweep_elements->parsed()) {
            elem_spec.side = parse_side(args.side);
            write_file(args.out_path, run_sweep_elements(s, elem_spec, rule));
        } else if (validate->parsed()) {
            const McSettings mc{args.trials, args.seed, args.workers};
            write_file(args.out_path, run_validate(s, mc, rule).dump(2) + "\n");
        } else if (optimize->parsed()) {
            const OptimizeOutput out = run_optimize(s, opt_spec, rule);
            write_file(args.out_path + ".json", out.placement_json.dump(2) + "\n");
            write_file(args.out_path + ".csv", out.power_csv);
        } else if (surface->parsed()) {
            write_file(args.out_path, run_surface_csv(s, surf_region, rule));
        }
        return 0;
    } catch (const ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
