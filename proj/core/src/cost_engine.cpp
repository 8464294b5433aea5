#include "memcost/cost_engine.hpp"

#include <cmath>
#include <sstream>

#include "memcost/errors.hpp"
#include "memcost/units.hpp"
#include "memcost/validate.hpp"

namespace memcost {
namespace {

void require(bool ok, const char* field, double value, const char* what) {
    if (ok) return;
    std::ostringstream os;
    os << what << ", got " << value;
    throw ValidationError({{field, os.str()}});
}

void require_nonneg(const char* field, double v) {
    require(std::isfinite(v) && v >= 0.0, field, v, "must be a finite nonnegative value");
}

}  // namespace

double mfp_from_measurements(double delta_et, double delta_ml) {
    require_nonneg("delta_et", delta_et);
    require(std::isfinite(delta_ml) && delta_ml > 0.0, "delta_ml", delta_ml,
            "must be > 0 (division by the latency increase)");
    return delta_et / delta_ml;
}

double required_throughput(double base_throughput, double mfp, double lat_incr) {
    require(std::isfinite(base_throughput) && base_throughput > 0.0, "base_throughput",
            base_throughput, "must be > 0");
    require_nonneg("mfp", mfp);
    require_nonneg("lat_incr", lat_incr);
    return (1.0 + mfp * lat_incr) * base_throughput;
}

double cost_of_latency(const WorkloadProfile& w, double lat_incr, const ProcessorConfig& p,
                       const PricingModel& m) {
    std::vector<ValidationIssue> issues = validate(w);
    auto more = validate(p);
    issues.insert(issues.end(), more.begin(), more.end());
    more = validate(m);
    issues.insert(issues.end(), more.begin(), more.end());
    if (!issues.empty()) throw ValidationError(std::move(issues));
    require_nonneg("lat_incr", lat_incr);

    // Closed form of price_at(required_throughput) - price_at(base_throughput).
    return m.slope * w.mfp * lat_incr * p.base_throughput;
}

double memory_savings(const MemoryConfig& mc) {
    auto issues = validate(mc);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return mc.capacity_gb_per_socket * mc.price_per_gb * mc.savings_fraction;
}

double cost_of_bandwidth(double unit_cost_delta, double bw_gbps) {
    require_nonneg("unit_cost_delta", unit_cost_delta);
    require_nonneg("bw_gbps", bw_gbps);
    return unit_cost_delta * bw_gbps;
}

double switch_unit_cost(double port_cost, double link_rate_gbps) {
    require_nonneg("port_cost", port_cost);
    require(std::isfinite(link_rate_gbps) && link_rate_gbps > 0.0, "link_rate_gbps",
            link_rate_gbps, "must be > 0 (division by the link rate)");
    return port_cost / link_rate_gbps;
}

double fabric_unit_cost(const FabricCost& f) {
    auto issues = validate(f);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    double unit = f.transceiver_unit_cost + f.cabling_unit_cost;
    if (f.switch_port_cost > 0.0) unit += switch_unit_cost(f.switch_port_cost, f.link_rate_gbps);
    return unit;
}

double net_gain(double ms, double cl, double cb) {
    require(std::isfinite(ms), "ms", ms, "must be finite");
    require(std::isfinite(cl), "cl", cl, "must be finite");
    require(std::isfinite(cb), "cb", cb, "must be finite");
    return ms - cl - cb;
}

BreakevenResult breakeven_unit_cost(double ms, double cl, double bw_gbps,
                                    double baseline_unit_cost) {
    require(std::isfinite(ms), "ms", ms, "must be finite");
    require(std::isfinite(cl), "cl", cl, "must be finite");
    require(std::isfinite(bw_gbps) && bw_gbps > 0.0, "bw_gbps", bw_gbps,
            "must be > 0 (division by the memory bandwidth)");
    require_nonneg("baseline_unit_cost", baseline_unit_cost);

    BreakevenResult result;
    result.cb_budget_dollars = ms - cl;
    result.delta_unit_cost = result.cb_budget_dollars / bw_gbps;
    result.equivalent_unit_cost = result.delta_unit_cost + baseline_unit_cost;
    result.feasible = result.cb_budget_dollars >= 0.0;
    return result;
}

ScenarioAnalysis analyze_scenario(const Scenario& s) {
    ensure_valid(s);

    ScenarioAnalysis a;
    a.latency = compose_latency(s.latency);
    a.bandwidth_gbps = gbytes_to_gbps(s.processor.mem_bandwidth_gbytes_per_s);

    const double ms = memory_savings(s.memory);
    const double cl = cost_of_latency(s.workload, a.latency.lat_incr, s.processor, s.pricing);

    double cb = 0.0;
    if (s.fabric) {
        a.has_fabric = true;
        a.fabric_unit_cost_total = fabric_unit_cost(*s.fabric);
        a.fabric_unit_cost_delta = a.fabric_unit_cost_total - s.memory.baseline_unit_cost;
        // The delta may be negative when the fabric undercuts the electrical
        // baseline; CB then acts as a credit.
        cb = a.fabric_unit_cost_delta * a.bandwidth_gbps;
    }

    a.breakeven = breakeven_unit_cost(ms, cl, a.bandwidth_gbps, s.memory.baseline_unit_cost);

    a.breakdown.ms_dollars = ms;
    a.breakdown.cl_dollars = cl;
    a.breakdown.cb_dollars = cb;
    a.breakdown.gain_dollars = net_gain(ms, cl, cb);
    a.breakdown.breakeven_delta_unit_cost = a.breakeven.delta_unit_cost;
    a.breakdown.breakeven_equivalent_unit_cost = a.breakeven.equivalent_unit_cost;
    a.breakdown.lat_incr = a.latency.lat_incr;
    return a;
}

}  // namespace memcost
