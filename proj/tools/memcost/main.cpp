#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "memcost/errors.hpp"

using namespace memcost;
using namespace memcost::cli;

int main(int argc, char** argv) {
    CLI::App app{"cost-performance analysis for disaggregated, optically attached memory"};
    app.require_subcommand(1);

    std::string dataset_path;
    bool fit_json = false;
    auto* fit = app.add_subcommand("fit", "fit the price-performance model to a processor CSV");
    fit->add_option("dataset", dataset_path, "CSV with header model,throughput,price_usd")
        ->required();
    fit->add_flag("--json", fit_json, "machine-readable output");

    std::string analyze_scenario_arg;
    bool analyze_json = false;
    std::optional<std::string> analyze_out;
    auto* analyze =
        app.add_subcommand("analyze", "cost breakdown and breakeven for one scenario");
    analyze->add_option("scenario", analyze_scenario_arg,
                        "scenario file or bundled scenario name")
        ->required();
    analyze->add_flag("--json", analyze_json, "emit the JSON report instead of text");
    analyze->add_option("--out", analyze_out, "write the report to a file");

    std::string sweep_scenario_arg;
    SweepOptions sweep_options;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
    double unit_cost = 0.0;
    double unit_from = 0.0;
    double unit_to = 0.0;
    double unit_step = 0.0;
    std::optional<std::string> sweep_out;
    auto* sweep = app.add_subcommand("sweep", "emit a curve or gain surface as CSV");
    sweep->add_option("scenario", sweep_scenario_arg, "scenario file or bundled scenario name")
        ->required();
    sweep
        ->add_option("--curve", sweep_options.curve,
                     "latency-cost | bandwidth-cost | equal-cost | gain-surface")
        ->required()
        ->check(CLI::IsMember(
            {"latency-cost", "bandwidth-cost", "equal-cost", "gain-surface"}));
    auto* from_opt = sweep->add_option("--from", from, "axis start (default 0)");
    auto* to_opt = sweep->add_option(
        "--to", to, "axis stop (default 1, or 1840 Gbps for bandwidth-cost)");
    auto* step_opt = sweep->add_option(
        "--step", step, "axis step (default 0.05, or 40 Gbps for bandwidth-cost)");
    auto* unit_cost_opt = sweep->add_option(
        "--unit-cost", unit_cost,
        "bandwidth-cost only: $/Gbps of the line (default: the scenario's fabric)");
    auto* unit_from_opt =
        sweep->add_option("--unit-from", unit_from, "gain-surface only: unit-cost axis start");
    auto* unit_to_opt =
        sweep->add_option("--unit-to", unit_to, "gain-surface only: unit-cost axis stop");
    auto* unit_step_opt =
        sweep->add_option("--unit-step", unit_step, "gain-surface only: unit-cost axis step");
    sweep->add_option("--out", sweep_out, "write the CSV to a file");

    auto* workloads =
        app.add_subcommand("workloads", "list the bundled workload sensitivity table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const CommandIO io{std::cout, std::cerr};
    try {
        if (*fit) return cmd_fit(dataset_path, fit_json, io);
        if (*analyze) return cmd_analyze(analyze_scenario_arg, analyze_json, analyze_out, io);
        if (*sweep) {
            if (from_opt->count() || to_opt->count() || step_opt->count()) {
                SweepRange range{0.0, 1.0, 0.05};
                if (sweep_options.curve == "bandwidth-cost") range = {0.0, 1840.0, 40.0};
                if (from_opt->count()) range.start = from;
                if (to_opt->count()) range.stop = to;
                if (step_opt->count()) range.step = step;
                sweep_options.range = range;
            }
            if (unit_cost_opt->count()) sweep_options.unit_cost = unit_cost;
            if (unit_from_opt->count() || unit_to_opt->count() || unit_step_opt->count()) {
                SweepRange range{0.0, 3.0, 0.05};
                if (unit_from_opt->count()) range.start = unit_from;
                if (unit_to_opt->count()) range.stop = unit_to;
                if (unit_step_opt->count()) range.step = unit_step;
                sweep_options.unit_range = range;
            }
            sweep_options.out_path = sweep_out;
            return cmd_sweep(sweep_scenario_arg, sweep_options, io);
        }
        if (*workloads) return cmd_workloads(io);
    } catch (const FitError& e) {
        std::cerr << "memcost: " << e.what() << "\n";
        return kExitDegenerateFit;
    } catch (const SweepError& e) {
        std::cerr << "memcost: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const Error& e) {
        std::cerr << "memcost: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "memcost: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
