#pragma once

#include "memcost/latency.hpp"
#include "memcost/types.hpp"

namespace memcost {

// Memory fraction of performance from a measured execution-time increase at a
// measured latency increase, both as fractions of their baselines.
double mfp_from_measurements(double delta_et, double delta_ml);

// Throughput a replacement processor needs to hold performance constant under
// the given latency increase: (1 + mfp * lat_incr) * base_throughput.
double required_throughput(double base_throughput, double mfp, double lat_incr);

// Dollar cost of compensating the latency-induced throughput loss via a
// faster processor. Equals slope * mfp * lat_incr * base_throughput; the
// pricing intercept cancels in the price difference, so negative extrapolated
// prices never affect the result.
double cost_of_latency(const WorkloadProfile&, double lat_incr, const ProcessorConfig&,
                       const PricingModel&);

// Dollar value of the DRAM capacity recovered per socket by pooling.
double memory_savings(const MemoryConfig&);

// Fabric cost delta over the electrical baseline at a given bandwidth.
double cost_of_bandwidth(double unit_cost_delta, double bw_gbps);

// Per-Gbps share of a switch port.
double switch_unit_cost(double port_cost, double link_rate_gbps);

// Total fabric unit cost: transceiver + cabling + amortized switch port.
double fabric_unit_cost(const FabricCost&);

double net_gain(double ms, double cl, double cb);

struct BreakevenResult {
    double cb_budget_dollars = 0.0;     // bandwidth spend at which G = 0
    double delta_unit_cost = 0.0;       // $/Gbps over the electrical baseline
    double equivalent_unit_cost = 0.0;  // $/Gbps absolute
    bool feasible = false;              // false when latency cost exceeds savings
};

// Unit cost at which the disaggregated and direct-attached systems have equal
// cost and equal performance. Infeasible results are reported, not errors:
// they mark configurations where disaggregation can never pay.
BreakevenResult breakeven_unit_cost(double ms, double cl, double bw_gbps,
                                    double baseline_unit_cost);

struct ScenarioAnalysis {
    LatencySummary latency;
    double bandwidth_gbps = 0.0;
    bool has_fabric = false;
    double fabric_unit_cost_total = 0.0;  // $/Gbps, 0 when no fabric given
    double fabric_unit_cost_delta = 0.0;  // over the baseline, may be negative
    CostBreakdown breakdown;
    BreakevenResult breakeven;
};

// Full composition for one validated scenario: latency budget, MS, CL, CB
// (when a fabric is given), net gain and both breakeven unit costs.
ScenarioAnalysis analyze_scenario(const Scenario&);

}  // namespace memcost
