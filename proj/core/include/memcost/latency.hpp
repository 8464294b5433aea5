#pragma once

#include "memcost/types.hpp"

namespace memcost {

// Composed memory latency relative to the direct-attached baseline.
// total_ns = base_ns + delta_ns and lat_incr = delta_ns / base_ns.
struct LatencySummary {
    double total_ns = 0.0;
    double delta_ns = 0.0;
    double lat_incr = 0.0;
};

// Propagation delay over the round-trip cable length.
double distance_delay_ns(double distance_m_roundtrip, double propagation_ns_per_m);

// Sums the distance, SerDes, FEC, switch and protocol terms on top of the
// base latency. Throws ValidationError for an invalid profile (base_ns = 0
// would otherwise divide by zero).
LatencySummary compose_latency(const LatencyProfile&);

}  // namespace memcost
