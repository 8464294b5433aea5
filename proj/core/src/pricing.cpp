#include "memcost/pricing.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "memcost/errors.hpp"

namespace memcost {
namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

double parse_double(const std::string& token, const char* what, std::size_t line_no) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        std::ostringstream os;
        os << "line " << line_no << ": invalid " << what << " '" << token << "'";
        throw IngestError(os.str());
    }
    return value;
}

void check_record(const ProcessorRecord& r, const std::string& where) {
    if (r.model.empty()) throw IngestError(where + ": model name must not be empty");
    if (!std::isfinite(r.throughput) || !(r.throughput > 0.0)) {
        std::ostringstream os;
        os << where << ": throughput must be > 0, got " << r.throughput;
        throw IngestError(os.str());
    }
    if (!std::isfinite(r.price) || !(r.price > 0.0)) {
        std::ostringstream os;
        os << where << ": price must be > 0, got " << r.price;
        throw IngestError(os.str());
    }
}

}  // namespace

std::vector<ProcessorRecord> ingest_records(std::vector<ProcessorRecord> rows) {
    if (rows.empty()) throw IngestError("no records to ingest");

    struct Bucket {
        double price = 0.0;
        std::vector<double> rates;
    };
    std::map<std::string, Bucket> by_model;

    for (const auto& row : rows) {
        check_record(row, "record '" + row.model + "'");
        auto [it, inserted] = by_model.try_emplace(row.model);
        if (inserted) {
            it->second.price = row.price;
        } else if (it->second.price != row.price) {
            std::ostringstream os;
            os << "conflicting prices for model '" << row.model << "': " << it->second.price
               << " vs " << row.price;
            throw IngestError(os.str());
        }
        it->second.rates.push_back(row.throughput);
    }

    std::vector<ProcessorRecord> out;
    out.reserve(by_model.size());
    for (auto& [model, bucket] : by_model) {
        // Summing in sorted order keeps the mean bit-identical under any
        // permutation of the input rows.
        std::sort(bucket.rates.begin(), bucket.rates.end());
        const double sum = std::accumulate(bucket.rates.begin(), bucket.rates.end(), 0.0);
        out.push_back({model, sum / static_cast<double>(bucket.rates.size()), bucket.price});
    }
    return out;
}

std::vector<ProcessorRecord> load_processor_csv(std::istream& in) {
    std::vector<ProcessorRecord> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;

        if (!header_seen) {
            if (text != "model,throughput,price_usd") {
                std::ostringstream os;
                os << "line " << line_no
                   << ": expected header 'model,throughput,price_usd', got '" << text << "'";
                throw IngestError(os.str());
            }
            header_seen = true;
            continue;
        }

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            fields.push_back(trim(text.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 3) {
            std::ostringstream os;
            os << "line " << line_no << ": expected 3 fields, got " << fields.size();
            throw IngestError(os.str());
        }

        ProcessorRecord r;
        r.model = fields[0];
        r.throughput = parse_double(fields[1], "throughput", line_no);
        r.price = parse_double(fields[2], "price_usd", line_no);
        std::ostringstream where;
        where << "line " << line_no;
        check_record(r, where.str());
        rows.push_back(std::move(r));
    }

    if (!header_seen) throw IngestError("dataset is empty: missing header row");
    if (rows.empty()) throw IngestError("dataset has a header but no data rows");
    return rows;
}

std::vector<ProcessorRecord> load_processor_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open dataset file: " + path.string());
    return load_processor_csv(in);
}

FitResult fit_price_model(std::span<const ProcessorRecord> records) {
    if (records.size() < 2)
        throw FitError("insufficient data: least-squares fit needs at least 2 records, got " +
                       std::to_string(records.size()));

    const double n = static_cast<double>(records.size());
    double mean_t = 0.0;
    double mean_p = 0.0;
    for (const auto& r : records) {
        mean_t += r.throughput;
        mean_p += r.price;
    }
    mean_t /= n;
    mean_p /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& r : records) {
        const double dt = r.throughput - mean_t;
        sxx += dt * dt;
        sxy += dt * (r.price - mean_p);
    }
    if (!(sxx > 0.0))
        throw FitError("degenerate fit: all records share the same throughput");

    FitResult result;
    result.model.slope = sxy / sxx;
    result.model.intercept = mean_p - result.model.slope * mean_t;
    result.points = records.size();

    double ss_res = 0.0;
    for (const auto& r : records) {
        const double residual =
            r.price - (result.model.slope * r.throughput + result.model.intercept);
        ss_res += residual * residual;
    }
    result.residual_rms = std::sqrt(ss_res / n);
    return result;
}

PriceEstimate price_at(const PricingModel& m, double throughput) {
    if (!std::isfinite(throughput) || !(throughput > 0.0)) {
        std::ostringstream os;
        os << "must be a finite positive throughput, got " << throughput;
        throw ValidationError({{"throughput", os.str()}});
    }
    PriceEstimate estimate;
    estimate.dollars = m.slope * throughput + m.intercept;
    estimate.negative = estimate.dollars < 0.0;
    return estimate;
}

}  // namespace memcost
