#include "scenario_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "memcost/errors.hpp"
#include "memcost/validate.hpp"

namespace memcost::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

struct RawValue {
    std::string text;
    std::size_t line = 0;
};

using RawSection = std::map<std::string, RawValue>;
using RawDoc = std::map<std::string, RawSection>;

// Accumulates schema errors and default-tracking while fields are pulled out
// of one raw section.
class FieldReader {
  public:
    FieldReader(RawDoc& doc, std::string section, std::vector<ValidationIssue>& issues,
                std::vector<std::string>& defaulted)
        : section_(std::move(section)), issues_(issues), defaulted_(defaulted) {
        auto it = doc.find(section_);
        if (it != doc.end()) raw_ = &it->second;
    }

    bool section_present() const { return raw_ != nullptr; }

    std::string text(const char* key, std::string fallback) {
        if (auto* v = take(key)) return v->text;
        note_default(key);
        return fallback;
    }

    double number(const char* key) { return number_impl(key, std::nullopt); }
    double number(const char* key, double fallback) { return number_impl(key, fallback); }

    int integer(const char* key, int fallback) {
        auto* v = take(key);
        if (!v) {
            note_default(key);
            return fallback;
        }
        int out = 0;
        const char* first = v->text.data();
        const char* last = first + v->text.size();
        auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc{} || ptr != last) {
            fail(key, "expected an integer, got '" + v->text + "'");
            return fallback;
        }
        return out;
    }

    // Flags every key that was never consumed.
    void finish() {
        if (!raw_) return;
        for (const auto& [key, value] : *raw_) {
            if (!consumed_.count(key)) {
                std::ostringstream os;
                os << "unknown key (line " << value.line << ")";
                issues_.push_back({section_ + "." + key, os.str()});
            }
        }
    }

  private:
    double number_impl(const char* key, std::optional<double> fallback) {
        auto* v = take(key);
        if (!v) {
            if (fallback) {
                note_default(key);
                return *fallback;
            }
            fail(key, "required value is missing");
            return 0.0;
        }
        std::string token = v->text;
        double scale = 1.0;
        if (!token.empty() && token.back() == '%') {
            token = trim(token.substr(0, token.size() - 1));
            scale = 1.0 / 100.0;
        }
        double out = 0.0;
        const char* first = token.data();
        const char* last = first + token.size();
        auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc{} || ptr != last || !std::isfinite(out)) {
            fail(key, "expected a number, got '" + v->text + "'");
            return 0.0;
        }
        return out * scale;
    }

    RawValue* take(const char* key) {
        if (!raw_) return nullptr;
        auto it = raw_->find(key);
        if (it == raw_->end()) return nullptr;
        consumed_.insert(key);
        return &it->second;
    }

    void note_default(const char* key) { defaulted_.push_back(section_ + "." + key); }
    void fail(const char* key, std::string message) {
        issues_.push_back({section_ + "." + std::string(key), std::move(message)});
    }

    std::string section_;
    RawSection* raw_ = nullptr;
    std::set<std::string> consumed_;
    std::vector<ValidationIssue>& issues_;
    std::vector<std::string>& defaulted_;
};

ParsedScenario build_from_doc(RawDoc doc, std::vector<ValidationIssue> issues) {
    static const char* known_sections[] = {"processor", "workload", "memory",
                                           "latency",   "pricing",  "fabric"};
    for (const auto& [name, section] : doc) {
        if (std::find_if(std::begin(known_sections), std::end(known_sections),
                         [&](const char* k) { return name == k; }) ==
            std::end(known_sections)) {
            const std::size_t line = section.empty() ? 0 : section.begin()->second.line;
            std::ostringstream os;
            os << "unknown section";
            if (line) os << " (near line " << line << ")";
            issues.push_back({name, os.str()});
        }
    }
    for (const char* required : {"processor", "workload", "memory", "latency"}) {
        if (!doc.count(required))
            issues.push_back({required, "required section is missing"});
    }

    ParsedScenario out;
    Scenario& s = out.scenario;

    {
        FieldReader r(doc, "processor", issues, out.defaulted_fields);
        if (r.section_present()) {
            s.processor.name = r.text("name", "processor");
            s.processor.base_throughput = r.number("base_throughput");
            s.processor.mem_bandwidth_gbytes_per_s = r.number("mem_bandwidth_gbytes_per_s");
            r.finish();
        }
    }
    {
        FieldReader r(doc, "workload", issues, out.defaulted_fields);
        if (r.section_present()) {
            s.workload.name = r.text("name", "workload");
            s.workload.smt_level = r.integer("smt_level", 1);
            s.workload.mfp = r.number("mfp");
            r.finish();
        }
    }
    {
        FieldReader r(doc, "memory", issues, out.defaulted_fields);
        if (r.section_present()) {
            s.memory.capacity_gb_per_socket = r.number("capacity_gb_per_socket");
            s.memory.price_per_gb = r.number("price_per_gb_usd");
            s.memory.savings_fraction = r.number("savings_fraction");
            s.memory.baseline_unit_cost =
                r.number("baseline_unit_cost_usd_per_gbps", kDefaultBaselineUnitCost);
            r.finish();
        }
    }
    {
        FieldReader r(doc, "latency", issues, out.defaulted_fields);
        if (r.section_present()) {
            s.latency.base_ns = r.number("base_ns");
            s.latency.distance_m_roundtrip = r.number("distance_m_roundtrip", 0.0);
            s.latency.propagation_ns_per_m =
                r.number("propagation_ns_per_m", kDefaultPropagationNsPerM);
            s.latency.serdes_ns = r.number("serdes_ns", 0.0);
            s.latency.fec_ns = r.number("fec_ns", 0.0);
            s.latency.switch_ns = r.number("switch_ns", 0.0);
            s.latency.protocol_ns = r.number("protocol_ns", 0.0);
            r.finish();
        }
    }
    {
        // The pricing section may be omitted entirely; the shipped
        // price-performance coefficients then apply.
        FieldReader r(doc, "pricing", issues, out.defaulted_fields);
        const PricingModel fallback = default_pricing_model();
        s.pricing.slope = r.number("slope_usd_per_point", fallback.slope);
        s.pricing.intercept = r.number("intercept_usd", fallback.intercept);
        r.finish();
    }
    if (doc.count("fabric")) {
        FieldReader r(doc, "fabric", issues, out.defaulted_fields);
        FabricCost f;
        f.transceiver_unit_cost = r.number("transceiver_unit_cost_usd_per_gbps", 0.0);
        f.cabling_unit_cost = r.number("cabling_unit_cost_usd_per_gbps", 0.0);
        f.switch_port_cost = r.number("switch_port_cost_usd", 0.0);
        f.link_rate_gbps = r.number("link_rate_gbps", 0.0);
        r.finish();
        s.fabric = f;
    }

    if (!issues.empty()) throw ValidationError(std::move(issues));

    std::sort(out.defaulted_fields.begin(), out.defaulted_fields.end());
    return out;
}

}  // namespace

ParsedScenario parse_scenario_text(std::istream& in) {
    RawDoc doc;
    std::vector<ValidationIssue> issues;
    std::string line;
    std::string section;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;

        if (text.front() == '[') {
            if (text.back() != ']') {
                issues.push_back({"line " + std::to_string(line_no),
                                  "malformed section header '" + text + "'"});
                continue;
            }
            section = trim(text.substr(1, text.size() - 2));
            if (section.empty())
                issues.push_back({"line " + std::to_string(line_no), "empty section name"});
            doc.try_emplace(section);
            continue;
        }

        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            issues.push_back({"line " + std::to_string(line_no),
                              "expected 'key = value', got '" + text + "'"});
            continue;
        }
        if (section.empty()) {
            issues.push_back({"line " + std::to_string(line_no),
                              "key before any [section] header"});
            continue;
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) {
            issues.push_back({"line " + std::to_string(line_no), "empty key"});
            continue;
        }
        auto [it, inserted] = doc[section].try_emplace(key, RawValue{value, line_no});
        if (!inserted) {
            std::ostringstream os;
            os << "duplicate key (line " << line_no << ", first seen line " << it->second.line
               << ")";
            issues.push_back({section + "." + key, os.str()});
        }
    }

    return build_from_doc(std::move(doc), std::move(issues));
}

ParsedScenario parse_scenario_json(const json& root) {
    const json* obj = &root;
    if (root.is_object() && root.contains("scenario")) obj = &root.at("scenario");
    if (!obj->is_object()) throw IngestError("scenario JSON must be an object");

    RawDoc doc;
    std::vector<ValidationIssue> issues;
    std::vector<std::string> defaulted;

    for (const auto& [section, body] : obj->items()) {
        if (section == "defaulted_fields") {
            if (!body.is_array()) {
                issues.push_back({"defaulted_fields", "must be an array of strings"});
                continue;
            }
            for (const auto& f : body) {
                if (f.is_string()) defaulted.push_back(f.get<std::string>());
            }
            continue;
        }
        if (!body.is_object()) {
            issues.push_back({section, "section must be a JSON object"});
            continue;
        }
        RawSection& raw = doc[section];
        for (const auto& [key, value] : body.items()) {
            std::string text;
            if (value.is_string()) {
                text = value.get<std::string>();
            } else if (value.is_number() || value.is_boolean()) {
                // Render through the JSON serializer so doubles survive
                // bit-exactly on the way back in.
                text = value.dump();
            } else {
                issues.push_back({section + "." + key, "unsupported JSON value " + value.dump()});
                continue;
            }
            raw.emplace(key, RawValue{text, 0});
        }
    }

    ParsedScenario out = build_from_doc(std::move(doc), std::move(issues));
    if (!defaulted.empty()) {
        // Trust the echoed provenance: a re-ingested report keeps reporting
        // the same fields as defaulted.
        out.defaulted_fields = std::move(defaulted);
        std::sort(out.defaulted_fields.begin(), out.defaulted_fields.end());
        out.defaulted_fields.erase(
            std::unique(out.defaulted_fields.begin(), out.defaulted_fields.end()),
            out.defaulted_fields.end());
    }
    return out;
}

ParsedScenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open scenario file: " + path.string());

    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();

    ParsedScenario parsed;
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        json root;
        try {
            root = json::parse(content);
        } catch (const json::parse_error& e) {
            throw IngestError("invalid JSON in " + path.string() + ": " + e.what());
        }
        parsed = parse_scenario_json(root);
    } else {
        std::istringstream text(content);
        parsed = parse_scenario_text(text);
    }

    auto issues = validate_scenario(parsed.scenario);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return parsed;
}

ordered_json scenario_to_json(const ParsedScenario& p) {
    const Scenario& s = p.scenario;
    ordered_json j;
    j["processor"] = {{"name", s.processor.name},
                      {"base_throughput", s.processor.base_throughput},
                      {"mem_bandwidth_gbytes_per_s", s.processor.mem_bandwidth_gbytes_per_s}};
    j["workload"] = {{"name", s.workload.name},
                     {"smt_level", s.workload.smt_level},
                     {"mfp", s.workload.mfp}};
    j["memory"] = {{"capacity_gb_per_socket", s.memory.capacity_gb_per_socket},
                   {"price_per_gb_usd", s.memory.price_per_gb},
                   {"savings_fraction", s.memory.savings_fraction},
                   {"baseline_unit_cost_usd_per_gbps", s.memory.baseline_unit_cost}};
    j["latency"] = {{"base_ns", s.latency.base_ns},
                    {"distance_m_roundtrip", s.latency.distance_m_roundtrip},
                    {"propagation_ns_per_m", s.latency.propagation_ns_per_m},
                    {"serdes_ns", s.latency.serdes_ns},
                    {"fec_ns", s.latency.fec_ns},
                    {"switch_ns", s.latency.switch_ns},
                    {"protocol_ns", s.latency.protocol_ns}};
    j["pricing"] = {{"slope_usd_per_point", s.pricing.slope},
                    {"intercept_usd", s.pricing.intercept}};
    if (s.fabric) {
        j["fabric"] = {{"transceiver_unit_cost_usd_per_gbps", s.fabric->transceiver_unit_cost},
                       {"cabling_unit_cost_usd_per_gbps", s.fabric->cabling_unit_cost},
                       {"switch_port_cost_usd", s.fabric->switch_port_cost},
                       {"link_rate_gbps", s.fabric->link_rate_gbps}};
    }
    j["defaulted_fields"] = p.defaulted_fields;
    return j;
}

}  // namespace memcost::cli
