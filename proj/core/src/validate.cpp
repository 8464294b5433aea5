#include "memcost/validate.hpp"

#include <cmath>
#include <sstream>

namespace memcost {
namespace {

std::string show(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void add(std::vector<ValidationIssue>& out, const std::string& prefix, const char* field,
         const std::string& message) {
    out.push_back({prefix + "." + field, message});
}

// Returns true when the value is finite, otherwise records an issue so the
// range checks below can be skipped for this field.
bool finite(std::vector<ValidationIssue>& out, const std::string& prefix, const char* field,
            double v) {
    if (std::isfinite(v)) return true;
    add(out, prefix, field, "must be finite, got " + show(v));
    return false;
}

void check_nonneg(std::vector<ValidationIssue>& out, const std::string& prefix, const char* field,
                  double v) {
    if (finite(out, prefix, field, v) && v < 0.0)
        add(out, prefix, field, "must be >= 0, got " + show(v));
}

void check_pos(std::vector<ValidationIssue>& out, const std::string& prefix, const char* field,
               double v) {
    if (finite(out, prefix, field, v) && !(v > 0.0))
        add(out, prefix, field, "must be > 0, got " + show(v));
}

void check_fraction(std::vector<ValidationIssue>& out, const std::string& prefix,
                    const char* field, double v) {
    if (finite(out, prefix, field, v) && (v < 0.0 || v > 1.0))
        add(out, prefix, field, "must be in [0, 1], got " + show(v));
}

void append(std::vector<ValidationIssue>& out, std::vector<ValidationIssue> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
}

}  // namespace

std::vector<ValidationIssue> validate(const WorkloadProfile& w, const std::string& prefix) {
    std::vector<ValidationIssue> out;
    check_fraction(out, prefix, "mfp", w.mfp);
    if (w.smt_level != 1 && w.smt_level != 2 && w.smt_level != 4 && w.smt_level != 8)
        add(out, prefix, "smt_level",
            "must be one of 1, 2, 4, 8, got " + std::to_string(w.smt_level));
    return out;
}

std::vector<ValidationIssue> validate(const ProcessorConfig& p, const std::string& prefix) {
    std::vector<ValidationIssue> out;
    check_pos(out, prefix, "base_throughput", p.base_throughput);
    check_pos(out, prefix, "mem_bandwidth_gbytes_per_s", p.mem_bandwidth_gbytes_per_s);
    return out;
}

std::vector<ValidationIssue> validate(const PricingModel& m, const std::string& prefix) {
    std::vector<ValidationIssue> out;
    check_pos(out, prefix, "slope", m.slope);
    finite(out, prefix, "intercept", m.intercept);
    return out;
}

std::vector<ValidationIssue> validate(const LatencyProfile& p, const std::string& prefix) {
    std::vector<ValidationIssue> out;
    check_pos(out, prefix, "base_ns", p.base_ns);
    check_nonneg(out, prefix, "distance_m_roundtrip", p.distance_m_roundtrip);
    check_nonneg(out, prefix, "propagation_ns_per_m", p.propagation_ns_per_m);
    check_nonneg(out, prefix, "serdes_ns", p.serdes_ns);
    check_nonneg(out, prefix, "fec_ns", p.fec_ns);
    check_nonneg(out, prefix, "switch_ns", p.switch_ns);
    check_nonneg(out, prefix, "protocol_ns", p.protocol_ns);
    return out;
}

std::vector<ValidationIssue> validate(const MemoryConfig& m, const std::string& prefix) {
    std::vector<ValidationIssue> out;
    check_pos(out, prefix, "capacity_gb_per_socket", m.capacity_gb_per_socket);
    check_nonneg(out, prefix, "price_per_gb", m.price_per_gb);
    check_fraction(out, prefix, "savings_fraction", m.savings_fraction);
    check_nonneg(out, prefix, "baseline_unit_cost", m.baseline_unit_cost);
    return out;
}

std::vector<ValidationIssue> validate(const FabricCost& f, const std::string& prefix) {
    std::vector<ValidationIssue> out;
    check_nonneg(out, prefix, "transceiver_unit_cost", f.transceiver_unit_cost);
    check_nonneg(out, prefix, "cabling_unit_cost", f.cabling_unit_cost);
    check_nonneg(out, prefix, "switch_port_cost", f.switch_port_cost);
    check_nonneg(out, prefix, "link_rate_gbps", f.link_rate_gbps);
    if (std::isfinite(f.switch_port_cost) && std::isfinite(f.link_rate_gbps) &&
        f.switch_port_cost > 0.0 && !(f.link_rate_gbps > 0.0))
        add(out, prefix, "link_rate_gbps",
            "must be > 0 when switch_port_cost > 0, got " + show(f.link_rate_gbps));
    return out;
}

std::vector<ValidationIssue> validate_scenario(const Scenario& s) {
    std::vector<ValidationIssue> out;
    append(out, validate(s.processor));
    append(out, validate(s.workload));
    append(out, validate(s.memory));
    append(out, validate(s.latency));
    append(out, validate(s.pricing));
    if (s.fabric) append(out, validate(*s.fabric));
    return out;
}

const Scenario& ensure_valid(const Scenario& s) {
    auto issues = validate_scenario(s);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return s;
}

}  // namespace memcost
