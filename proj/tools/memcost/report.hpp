#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "memcost/cost_engine.hpp"
#include "scenario_file.hpp"

namespace memcost::cli {

struct AnalysisReport {
    ParsedScenario input;
    ScenarioAnalysis analysis;
    std::vector<std::string> warnings;
};

// Runs the engine and attaches advisory warnings (latency increase beyond the
// 100% analysis window, sensitivity above the observed range).
AnalysisReport build_report(ParsedScenario);

std::string render_text(const AnalysisReport&);
nlohmann::ordered_json render_json(const AnalysisReport&);

// Fixed output formats: dollars to cents, unit costs to 3 decimals, latency
// to 1 decimal ns, so reports are byte-stable run to run.
std::string fmt_money(double dollars);
std::string fmt_unit_cost(double dollars_per_gbps);  // bare number, 3 decimals
std::string fmt_ns(double ns);
std::string fmt_percent(double fraction);
std::string fmt_rate(double value);  // throughputs and bandwidths, 1 decimal
std::string fmt_axis(double value);  // CSV axis values, 6 significant digits

}  // namespace memcost::cli
