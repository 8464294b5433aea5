#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "memcost/types.hpp"

namespace memcost::test {

// |a - b| within rel * max(|a|, |b|, floor). The floor keeps comparisons
// against zero meaningful for dollar-scale quantities.
inline bool approx_rel(double a, double b, double rel, double floor = 1.0) {
    return std::fabs(a - b) <= rel * std::max({std::fabs(a), std::fabs(b), floor});
}

// Rack-scale reference scenario: single-rack memory chassis, 6 m optical
// round trip over a 75 ns direct-attached baseline.
inline Scenario rack_scenario() {
    Scenario s;
    s.processor = {"E5-like-400", 400.0, 68.0};
    s.workload = {"SPEC-INT-ST", 1, 0.20};
    s.memory = {128.0, 7.125, 0.5, 0.1};
    s.latency = {75.0, 6.0, 5.0, 0.0, 0.0, 0.0, 0.0};
    s.pricing = default_pricing_model();
    return s;
}

inline Scenario oltp_scenario() {
    Scenario s = rack_scenario();
    s.workload = {"OLTP", 1, 0.27};
    return s;
}

// Deterministic generator of valid scenarios for property tests.
class ScenarioGen {
  public:
    explicit ScenarioGen(unsigned seed) : rng_(seed) {}

    Scenario next() {
        Scenario s;
        s.processor.name = "gen";
        s.processor.base_throughput = uniform(50.0, 1000.0);
        s.processor.mem_bandwidth_gbytes_per_s = uniform(10.0, 300.0);
        s.workload.name = "gen";
        s.workload.smt_level = smt_levels_[rng_() % 4];
        s.workload.mfp = uniform(0.0, 1.0);
        s.memory.capacity_gb_per_socket = uniform(16.0, 512.0);
        s.memory.price_per_gb = uniform(1.0, 20.0);
        s.memory.savings_fraction = uniform(0.0, 1.0);
        s.memory.baseline_unit_cost = uniform(0.0, 0.5);
        s.latency.base_ns = uniform(50.0, 100.0);
        s.latency.distance_m_roundtrip = uniform(0.0, 100.0);
        s.latency.propagation_ns_per_m = uniform(4.0, 6.0);
        s.latency.serdes_ns = uniform(0.0, 20.0);
        s.latency.fec_ns = uniform(0.0, 200.0);
        s.latency.switch_ns = uniform(0.0, 10.0);
        s.latency.protocol_ns = uniform(0.0, 50.0);
        s.pricing.slope = uniform(0.5, 20.0);
        s.pricing.intercept = uniform(-2000.0, 2000.0);
        if (rng_() % 2 == 0) {
            FabricCost f;
            f.transceiver_unit_cost = uniform(0.0, 3.0);
            f.cabling_unit_cost = uniform(0.0, 1.0);
            f.switch_port_cost = uniform(0.0, 500.0);
            f.link_rate_gbps = uniform(40.0, 400.0);
            s.fabric = f;
        }
        return s;
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    std::mt19937& rng() { return rng_; }

  private:
    std::mt19937 rng_;
    static constexpr int smt_levels_[4] = {1, 2, 4, 8};
};

}  // namespace memcost::test
