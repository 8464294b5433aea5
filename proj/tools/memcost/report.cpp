#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace memcost::cli {
namespace {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string signed_dollars(double value, int decimals) {
    std::string s = fixed(value, decimals);
    bool negative = !s.empty() && s.front() == '-';
    if (negative) s.erase(0, 1);
    if (s.find_first_not_of("0.") == std::string::npos) negative = false;  // -0.00
    return (negative ? "-$" : "$") + s;
}

std::string join(const std::vector<std::string>& items) {
    if (items.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += "; ";
        out += items[i];
    }
    return out;
}

}  // namespace

std::string fmt_money(double dollars) { return signed_dollars(dollars, 2); }
std::string fmt_unit_cost(double v) { return fixed(v, 3); }
std::string fmt_ns(double ns) { return fixed(ns, 1); }
std::string fmt_percent(double fraction) { return fixed(fraction * 100.0, 1) + "%"; }
std::string fmt_rate(double value) { return fixed(value, 1); }

std::string fmt_axis(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

AnalysisReport build_report(ParsedScenario input) {
    AnalysisReport report{std::move(input), {}, {}};
    report.analysis = analyze_scenario(report.input.scenario);

    if (report.analysis.latency.lat_incr > 1.0) {
        report.warnings.push_back("latency increase " +
                                  fmt_percent(report.analysis.latency.lat_incr) +
                                  " is beyond the 100% analysis window");
    }
    if (report.input.scenario.workload.mfp > 0.6) {
        report.warnings.push_back("workload mfp " + fmt_percent(report.input.scenario.workload.mfp) +
                                  " is above the highest observed sensitivity (59%)");
    }
    return report;
}

std::string render_text(const AnalysisReport& r) {
    const Scenario& s = r.input.scenario;
    const ScenarioAnalysis& a = r.analysis;
    std::ostringstream out;

    out << "scenario: " << s.workload.name << " on " << s.processor.name << "\n";
    out << "workload: " << s.workload.name << " (smt " << s.workload.smt_level << ", mfp "
        << fmt_percent(s.workload.mfp) << ")\n";
    out << "processor: " << s.processor.name << " (rate " << fmt_rate(s.processor.base_throughput)
        << ", memory bandwidth " << fmt_rate(s.processor.mem_bandwidth_gbytes_per_s)
        << " GB/s = " << fmt_rate(a.bandwidth_gbps) << " Gbps)\n";
    out << "latency: base " << fmt_ns(s.latency.base_ns) << " ns + added "
        << fmt_ns(a.latency.delta_ns) << " ns = " << fmt_ns(a.latency.total_ns)
        << " ns (increase " << fmt_percent(a.latency.lat_incr) << ")\n";
    out << "memory savings (MS): " << fmt_money(a.breakdown.ms_dollars) << "\n";
    out << "cost of latency (CL): " << fmt_money(a.breakdown.cl_dollars) << "\n";
    if (a.has_fabric) {
        out << "fabric unit cost: $" << fmt_unit_cost(a.fabric_unit_cost_total) << "/Gbps ($"
            << fmt_unit_cost(a.fabric_unit_cost_delta) << "/Gbps over the $"
            << fmt_unit_cost(s.memory.baseline_unit_cost) << "/Gbps electrical baseline)\n";
        out << "cost of bandwidth (CB): " << fmt_money(a.breakdown.cb_dollars) << "\n";
    } else {
        out << "cost of bandwidth (CB): n/a (no fabric costs given, CB = $0.00)\n";
    }
    out << "net gain (G): " << fmt_money(a.breakdown.gain_dollars) << "\n";
    out << "breakeven unit cost: $" << fmt_unit_cost(a.breakeven.delta_unit_cost)
        << "/Gbps over baseline, $" << fmt_unit_cost(a.breakeven.equivalent_unit_cost)
        << "/Gbps equivalent\n";
    out << "breakeven feasible: " << (a.breakeven.feasible ? "yes" : "no") << "\n";
    out << "defaults used: " << join(r.input.defaulted_fields) << "\n";
    out << "warnings: " << join(r.warnings) << "\n";
    return out.str();
}

nlohmann::ordered_json render_json(const AnalysisReport& r) {
    const ScenarioAnalysis& a = r.analysis;
    nlohmann::ordered_json j;
    j["scenario"] = scenario_to_json(r.input);
    j["latency_summary"] = {{"base_ns", r.input.scenario.latency.base_ns},
                            {"delta_ns", a.latency.delta_ns},
                            {"total_ns", a.latency.total_ns},
                            {"lat_incr", a.latency.lat_incr}};
    j["bandwidth_gbps"] = a.bandwidth_gbps;
    if (a.has_fabric) {
        j["fabric_unit_cost"] = {{"total_usd_per_gbps", a.fabric_unit_cost_total},
                                 {"delta_usd_per_gbps", a.fabric_unit_cost_delta}};
    }
    j["breakdown"] = {{"ms_dollars", a.breakdown.ms_dollars},
                      {"cl_dollars", a.breakdown.cl_dollars},
                      {"cb_dollars", a.breakdown.cb_dollars},
                      {"gain_dollars", a.breakdown.gain_dollars},
                      {"lat_incr", a.breakdown.lat_incr}};
    j["breakeven"] = {{"cb_budget_dollars", a.breakeven.cb_budget_dollars},
                      {"delta_unit_cost_usd_per_gbps", a.breakeven.delta_unit_cost},
                      {"equivalent_unit_cost_usd_per_gbps", a.breakeven.equivalent_unit_cost},
                      {"feasible", a.breakeven.feasible}};
    j["warnings"] = r.warnings;
    return j;
}

}  // namespace memcost::cli
