#include "memcost/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "memcost/errors.hpp"
#include "memcost/units.hpp"
#include "memcost/validate.hpp"

namespace memcost {
namespace {

CostBreakdown make_breakdown(double ms, double cl, double cb, const BreakevenResult& be,
                             double lat_incr) {
    CostBreakdown b;
    b.ms_dollars = ms;
    b.cl_dollars = cl;
    b.cb_dollars = cb;
    b.gain_dollars = net_gain(ms, cl, cb);
    b.breakeven_delta_unit_cost = be.delta_unit_cost;
    b.breakeven_equivalent_unit_cost = be.equivalent_unit_cost;
    b.lat_incr = lat_incr;
    return b;
}

// Fabric cost delta per Gbps for the scenario, 0 when no fabric is given.
double scenario_unit_cost_delta(const Scenario& s) {
    if (!s.fabric) return 0.0;
    return fabric_unit_cost(*s.fabric) - s.memory.baseline_unit_cost;
}

}  // namespace

std::size_t sweep_point_count(const SweepRange& r) {
    const bool finite = std::isfinite(r.start) && std::isfinite(r.stop) && std::isfinite(r.step);
    if (!finite || r.start > r.stop || !(r.step > 0.0)) {
        std::ostringstream os;
        os << "invalid sweep range: start " << r.start << ", stop " << r.stop << ", step "
           << r.step << " (need start <= stop and step > 0)";
        throw SweepError(os.str());
    }
    const double raw = (r.stop - r.start) / r.step;
    if (raw > static_cast<double>(kMaxSweepPoints)) {
        std::ostringstream os;
        os << "sweep of " << raw << " steps exceeds the cap of " << kMaxSweepPoints << " points";
        throw SweepError(os.str());
    }
    auto n = static_cast<std::size_t>(std::llround(raw));
    // Nearest-rounding absorbs accumulation drift (1.0 / 0.05 = 19.9999...),
    // but must not mint a final point materially past stop when the step
    // does not divide the range.
    const double overshoot_tol = 1e-9 * std::max({std::fabs(r.stop), r.step, 1.0});
    if (n > 0 && r.start + static_cast<double>(n) * r.step > r.stop + overshoot_tol) --n;
    return n + 1;
}

std::vector<double> sweep_axis(const SweepRange& r) {
    const std::size_t n = sweep_point_count(r);
    std::vector<double> axis(n);
    for (std::size_t i = 0; i < n; ++i) axis[i] = r.start + static_cast<double>(i) * r.step;
    return axis;
}

std::vector<CurvePoint> latency_cost_curve(const Scenario& s, const SweepRange& lat) {
    ensure_valid(s);
    const double ms = memory_savings(s.memory);
    const double bw = gbytes_to_gbps(s.processor.mem_bandwidth_gbytes_per_s);
    const double cb = scenario_unit_cost_delta(s) * bw;

    std::vector<CurvePoint> curve;
    for (double x : sweep_axis(lat)) {
        const double cl = cost_of_latency(s.workload, x, s.processor, s.pricing);
        const auto be = breakeven_unit_cost(ms, cl, bw, s.memory.baseline_unit_cost);
        curve.push_back({x, cl, be.feasible, make_breakdown(ms, cl, cb, be, x)});
    }
    return curve;
}

std::vector<CurvePoint> equal_cost_curve(const Scenario& s, const SweepRange& lat) {
    ensure_valid(s);
    const double ms = memory_savings(s.memory);
    const double bw = gbytes_to_gbps(s.processor.mem_bandwidth_gbytes_per_s);

    std::vector<CurvePoint> curve;
    for (double x : sweep_axis(lat)) {
        const double cl = cost_of_latency(s.workload, x, s.processor, s.pricing);
        const auto be = breakeven_unit_cost(ms, cl, bw, s.memory.baseline_unit_cost);
        // Spending exactly the breakeven budget closes the gain to zero.
        curve.push_back({x, be.equivalent_unit_cost, be.feasible,
                         make_breakdown(ms, cl, be.cb_budget_dollars, be, x)});
    }
    return curve;
}

std::vector<CurvePoint> bandwidth_cost_line(const Scenario& s, double unit_cost,
                                            const SweepRange& bw) {
    ensure_valid(s);
    if (!std::isfinite(unit_cost) || unit_cost < 0.0) {
        std::ostringstream os;
        os << "must be a finite nonnegative unit cost, got " << unit_cost;
        throw ValidationError({{"unit_cost", os.str()}});
    }
    const double ms = memory_savings(s.memory);
    const auto lat = compose_latency(s.latency);
    const double cl = cost_of_latency(s.workload, lat.lat_incr, s.processor, s.pricing);

    std::vector<CurvePoint> line;
    for (double x : sweep_axis(bw)) {
        const double cb = (unit_cost - s.memory.baseline_unit_cost) * x;
        // The y value is the raw spend at this unit cost; the breakdown
        // charges only the delta over the electrical baseline. Zero bandwidth
        // has no per-Gbps breakeven, so those fields stay zero there.
        BreakevenResult be;
        be.cb_budget_dollars = ms - cl;
        be.feasible = be.cb_budget_dollars >= 0.0;
        if (x > 0.0) be = breakeven_unit_cost(ms, cl, x, s.memory.baseline_unit_cost);
        line.push_back({x, unit_cost * x, be.feasible, make_breakdown(ms, cl, cb, be, lat.lat_incr)});
    }
    return line;
}

std::vector<BandwidthCostLine> bandwidth_cost_lines(const Scenario& s,
                                                    std::span<const double> unit_costs,
                                                    const SweepRange& bw) {
    std::vector<BandwidthCostLine> lines;
    lines.reserve(unit_costs.size());
    for (double unit_cost : unit_costs)
        lines.push_back({unit_cost, bandwidth_cost_line(s, unit_cost, bw)});
    return lines;
}

std::vector<GridPoint> gain_surface(const Scenario& s, const SweepRange& lat,
                                    const SweepRange& unit_cost) {
    ensure_valid(s);
    const std::size_t n_lat = sweep_point_count(lat);
    const std::size_t n_unit = sweep_point_count(unit_cost);
    if (n_lat > kMaxSweepPoints / n_unit) {
        std::ostringstream os;
        os << "grid of " << n_lat << " x " << n_unit << " points exceeds the cap of "
           << kMaxSweepPoints;
        throw SweepError(os.str());
    }

    const double ms = memory_savings(s.memory);
    const double bw = gbytes_to_gbps(s.processor.mem_bandwidth_gbytes_per_s);
    const auto lat_axis = sweep_axis(lat);
    const auto unit_axis = sweep_axis(unit_cost);

    std::vector<GridPoint> grid;
    grid.reserve(n_lat * n_unit);
    for (double x : lat_axis) {
        const double cl = cost_of_latency(s.workload, x, s.processor, s.pricing);
        const auto be = breakeven_unit_cost(ms, cl, bw, s.memory.baseline_unit_cost);
        for (double u : unit_axis) {
            const double cb = (u - s.memory.baseline_unit_cost) * bw;
            grid.push_back({x, u, be.feasible, make_breakdown(ms, cl, cb, be, x)});
        }
    }
    return grid;
}

}  // namespace memcost
