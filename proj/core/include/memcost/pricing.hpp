#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "memcost/types.hpp"

namespace memcost {

// One processor market data point: benchmark throughput and list price.
struct ProcessorRecord {
    std::string model;
    double throughput = 0.0;
    double price = 0.0;  // dollars
};

// Collapses duplicate rows onto one record per distinct model: throughputs of
// duplicates are replaced by their arithmetic mean, prices must be identical
// across a model's rows. Output is sorted by model name, which makes the
// result independent of input order. Throws IngestError on a price conflict.
std::vector<ProcessorRecord> ingest_records(std::vector<ProcessorRecord> rows);

// Reads a processor dataset: CSV with header "model,throughput,price_usd",
// UTF-8, '#' lines ignored as comments. Rows are returned raw (not
// deduplicated); IngestError messages carry the offending line number.
std::vector<ProcessorRecord> load_processor_csv(std::istream&);
std::vector<ProcessorRecord> load_processor_csv_file(const std::filesystem::path&);

struct FitResult {
    PricingModel model;
    std::size_t points = 0;
    double residual_rms = 0.0;  // dollars
};

// Ordinary least squares with price regressed on throughput. Throws FitError
// given fewer than two records or zero throughput variance.
FitResult fit_price_model(std::span<const ProcessorRecord> records);

struct PriceEstimate {
    double dollars = 0.0;
    bool negative = false;  // model extrapolated below zero price
};

PriceEstimate price_at(const PricingModel&, double throughput);

}  // namespace memcost
