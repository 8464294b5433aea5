#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "memcost/cost_engine.hpp"
#include "memcost/types.hpp"

namespace memcost {

// Inclusive axis [start, stop] walked in increments of step.
struct SweepRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};

inline constexpr std::size_t kMaxSweepPoints = 1'000'000;

// Number of axis points: (stop - start) / step rounded to nearest, plus one.
// Axis values are start + i * step, which avoids accumulation drift. Throws
// SweepError for malformed ranges or when the point cap would be exceeded.
std::size_t sweep_point_count(const SweepRange&);
std::vector<double> sweep_axis(const SweepRange&);

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;
    bool feasible = false;  // breakeven budget (ms - cl) is nonnegative at x
    CostBreakdown breakdown;
};

// y = cost of latency (dollars) at each fractional latency increase.
std::vector<CurvePoint> latency_cost_curve(const Scenario&, const SweepRange& lat);

// y = equivalent breakeven unit cost ($/Gbps) at each latency increase.
// Infeasible points are emitted with the flag cleared, never truncated, so
// curves remain visible where they cross below the electrical baseline.
std::vector<CurvePoint> equal_cost_curve(const Scenario&, const SweepRange& lat);

// y = unit_cost * bandwidth (dollars) along a bandwidth axis in Gbps. The
// unit cost is the absolute fabric cost; the accompanying breakdown charges
// CB as the delta over the scenario's electrical baseline.
std::vector<CurvePoint> bandwidth_cost_line(const Scenario&, double unit_cost,
                                            const SweepRange& bw);

struct BandwidthCostLine {
    double unit_cost = 0.0;
    std::vector<CurvePoint> points;
};

// One line per unit cost, all over the same bandwidth axis.
std::vector<BandwidthCostLine> bandwidth_cost_lines(const Scenario&,
                                                    std::span<const double> unit_costs,
                                                    const SweepRange& bw);

struct GridPoint {
    double lat_incr = 0.0;
    double unit_cost = 0.0;  // absolute $/Gbps
    bool feasible = false;
    CostBreakdown breakdown;
};

// Net gain over the (latency increase, absolute unit cost) plane, row-major
// with the latency axis outermost. The G = 0 contour of this surface
// coincides with equal_cost_curve.
std::vector<GridPoint> gain_surface(const Scenario&, const SweepRange& lat,
                                    const SweepRange& unit_cost);

}  // namespace memcost
