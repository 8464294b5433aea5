#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace memcost {

// Reference latency-sensitivity table shipped with the tool. Entries without
// an MFP were simulated but their per-benchmark sensitivities are not
// published; they are listed rather than guessed at.
struct BundledWorkload {
    std::string_view name;
    int smt_level = 1;
    std::optional<double> mfp;
    std::string_view provenance;
};

std::span<const BundledWorkload> bundled_workloads();

// Lookup by exact name; nullptr when absent.
const BundledWorkload* find_bundled_workload(std::string_view name);

}  // namespace memcost
