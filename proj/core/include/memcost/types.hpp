#pragma once

#include <optional>
#include <string>

namespace memcost {

// Workload sensitivity to memory latency at a given SMT level. The MFP is the
// fraction of execution time attributable to memory latency: a workload with
// mfp 0.4 slows down 40% when memory latency doubles.
struct WorkloadProfile {
    std::string name;
    int smt_level = 1;  // logical threads per core: 1, 2, 4 or 8
    double mfp = 0.0;   // memory fraction of performance, 0..1
};

struct ProcessorConfig {
    std::string name;
    double base_throughput = 0.0;             // benchmark rate (SPEC-rate-like)
    double mem_bandwidth_gbytes_per_s = 0.0;  // per socket
};

// Affine price model: price = slope * throughput + intercept.
struct PricingModel {
    double slope = 0.0;      // dollars per throughput point
    double intercept = 0.0;  // dollars, may be negative
};

// Memory latency budget: direct-attached baseline plus additive terms a
// disaggregated fabric introduces. Distances are round trip.
struct LatencyProfile {
    double base_ns = 0.0;
    double distance_m_roundtrip = 0.0;
    double propagation_ns_per_m = 5.0;  // 1 ns per 0.2 m of fiber
    double serdes_ns = 0.0;
    double fec_ns = 0.0;
    double switch_ns = 0.0;
    double protocol_ns = 0.0;
};

struct MemoryConfig {
    double capacity_gb_per_socket = 0.0;
    double price_per_gb = 0.0;        // dollars
    double savings_fraction = 0.0;    // share of capacity recovered by pooling, 0..1
    double baseline_unit_cost = 0.1;  // $/Gbps of the direct-attached electrical link
};

// Acquisition cost of the optical fabric, per socket.
struct FabricCost {
    double transceiver_unit_cost = 0.0;  // $/Gbps
    double cabling_unit_cost = 0.0;      // $/Gbps
    double switch_port_cost = 0.0;       // $/port
    double link_rate_gbps = 0.0;         // Gbps per switch port
};

// One complete analysis input. Treated as immutable once validated; every
// operation over it is a pure function.
struct Scenario {
    ProcessorConfig processor;
    WorkloadProfile workload;
    MemoryConfig memory;
    LatencyProfile latency;
    PricingModel pricing;
    std::optional<FabricCost> fabric;
};

// Dollar decomposition of one scenario point. gain = ms - cl - cb always.
struct CostBreakdown {
    double ms_dollars = 0.0;    // memory savings
    double cl_dollars = 0.0;    // cost of latency
    double cb_dollars = 0.0;    // cost of bandwidth
    double gain_dollars = 0.0;  // net gain, may be negative
    double breakeven_delta_unit_cost = 0.0;       // $/Gbps over the electrical baseline
    double breakeven_equivalent_unit_cost = 0.0;  // $/Gbps absolute
    double lat_incr = 0.0;                        // fractional memory latency increase
};

// Canonical price-performance coefficients used when a scenario does not
// supply its own model (fit of Intel E5-2xxx v2/v3 list prices vs rate).
inline PricingModel default_pricing_model() { return PricingModel{4.85, -324.0}; }

inline constexpr double kDefaultBaselineUnitCost = 0.1;  // $/Gbps electrical link
inline constexpr double kDefaultPropagationNsPerM = 5.0;

}  // namespace memcost
