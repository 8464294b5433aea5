#include "memcost/workloads.hpp"

#include <array>

namespace memcost {
namespace {

constexpr std::array<BundledWorkload, 8> kBundledWorkloads{{
    {"SPEC-INT-ST", 1, 0.20, "SPEC CPU2006 integer suite average, single-threaded cores"},
    {"SPEC-FP-ST", 1, 0.16, "SPEC CPU2006 floating-point suite average, single-threaded cores"},
    {"SPEC-INT-SMT8", 8, 0.08, "SPEC CPU2006 integer suite average on SMT8 cores"},
    {"WORST-CASE", 1, 0.59, "highest individual-benchmark latency sensitivity observed"},
    {"OLTP", 1, 0.27,
     "derived: inverted from the $209 latency cost at +40% latency on a rate-400 processor"},
    {"ERP", 1, std::nullopt, "unavailable: per-benchmark sensitivity not published"},
    {"TRADE", 1, std::nullopt, "unavailable: per-benchmark sensitivity not published"},
    {"SALES", 1, std::nullopt, "unavailable: per-benchmark sensitivity not published"},
}};

}  // namespace

std::span<const BundledWorkload> bundled_workloads() { return kBundledWorkloads; }

const BundledWorkload* find_bundled_workload(std::string_view name) {
    for (const auto& w : kBundledWorkloads)
        if (w.name == name) return &w;
    return nullptr;
}

}  // namespace memcost
