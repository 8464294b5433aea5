#include "memcost/latency.hpp"

#include <cmath>
#include <sstream>

#include "memcost/errors.hpp"
#include "memcost/validate.hpp"

namespace memcost {
namespace {

void require_nonneg(const char* field, double v) {
    if (std::isfinite(v) && v >= 0.0) return;
    std::ostringstream os;
    os << "must be a finite nonnegative value, got " << v;
    throw ValidationError({{field, os.str()}});
}

}  // namespace

double distance_delay_ns(double distance_m_roundtrip, double propagation_ns_per_m) {
    require_nonneg("distance_m_roundtrip", distance_m_roundtrip);
    require_nonneg("propagation_ns_per_m", propagation_ns_per_m);
    return distance_m_roundtrip * propagation_ns_per_m;
}

LatencySummary compose_latency(const LatencyProfile& p) {
    auto issues = validate(p);
    if (!issues.empty()) throw ValidationError(std::move(issues));

    LatencySummary summary;
    summary.delta_ns = distance_delay_ns(p.distance_m_roundtrip, p.propagation_ns_per_m) +
                       p.serdes_ns + p.fec_ns + p.switch_ns + p.protocol_ns;
    summary.total_ns = p.base_ns + summary.delta_ns;
    summary.lat_incr = summary.delta_ns / p.base_ns;
    return summary;
}

}  // namespace memcost
