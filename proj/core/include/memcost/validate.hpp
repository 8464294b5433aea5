#pragma once

#include <string>
#include <vector>

#include "memcost/errors.hpp"
#include "memcost/types.hpp"

namespace memcost {

std::vector<ValidationIssue> validate(const WorkloadProfile&, const std::string& prefix = "workload");
std::vector<ValidationIssue> validate(const ProcessorConfig&, const std::string& prefix = "processor");
std::vector<ValidationIssue> validate(const PricingModel&, const std::string& prefix = "pricing");
std::vector<ValidationIssue> validate(const LatencyProfile&, const std::string& prefix = "latency");
std::vector<ValidationIssue> validate(const MemoryConfig&, const std::string& prefix = "memory");
std::vector<ValidationIssue> validate(const FabricCost&, const std::string& prefix = "fabric");

// Complete violation list for a scenario; empty means valid.
std::vector<ValidationIssue> validate_scenario(const Scenario&);

// Returns the scenario unchanged when valid, otherwise throws ValidationError
// carrying the full violation list. Idempotent.
const Scenario& ensure_valid(const Scenario&);

}  // namespace memcost
