#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "memcost/errors.hpp"
#include "memcost/pricing.hpp"
#include "report.hpp"
#include "scenario_file.hpp"

#ifndef MEMCOST_DEFAULT_DATA_DIR
#define MEMCOST_DEFAULT_DATA_DIR ""
#endif

namespace memcost::cli {
namespace {

namespace fs = std::filesystem;

void emit(const std::string& content, const std::optional<std::string>& out_path,
          const CommandIO& io) {
    if (!out_path) {
        io.out << content;
        return;
    }
    std::ofstream file(*out_path);
    if (!file) throw IngestError("cannot write output file: " + *out_path);
    file << content;
}

// y column: equal-cost and gain-surface carry unit costs, the others dollars.
std::string csv_y(const std::string& curve, double y) {
    if (curve == "equal-cost" || curve == "gain-surface") return fmt_unit_cost(y);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", y);
    return buf;
}

std::string csv_money(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void csv_row(std::ostream& os, const std::string& curve, double x, double y, bool feasible,
             const CostBreakdown& b) {
    os << fmt_axis(x) << ',' << csv_y(curve, y) << ',' << (feasible ? 1 : 0) << ','
       << csv_money(b.ms_dollars) << ',' << csv_money(b.cl_dollars) << ','
       << csv_money(b.cb_dollars) << ',' << csv_money(b.gain_dollars) << '\n';
}

SweepRange default_range(const std::string& curve) {
    if (curve == "bandwidth-cost") return {0.0, 1840.0, 40.0};  // up to a 230 GB/s socket
    return {0.0, 1.0, 0.05};
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<WorkloadRow> load_workloads_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open workload table: " + path.string());

    std::vector<WorkloadRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        if (!header_seen) {
            if (text != "name,smt_level,mfp_percent,provenance")
                throw IngestError("workload table line " + std::to_string(line_no) +
                                  ": unexpected header '" + text + "'");
            header_seen = true;
            continue;
        }
        WorkloadRow row;
        std::size_t start = 0;
        std::string* fields[3] = {&row.name, &row.smt, &row.mfp};
        bool ok = true;
        for (auto* field : fields) {
            const auto comma = text.find(',', start);
            if (comma == std::string::npos) {
                ok = false;
                break;
            }
            *field = trim(text.substr(start, comma - start));
            start = comma + 1;
        }
        if (!ok)
            throw IngestError("workload table line " + std::to_string(line_no) +
                              ": expected 4 fields");
        row.provenance = trim(text.substr(start));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IngestError("workload table is empty: " + path.string());
    return rows;
}

fs::path resolve_data_dir() {
    if (const char* env = std::getenv("MEMCOST_DATA_DIR"); env && *env) return fs::path(env);
    return fs::path(MEMCOST_DEFAULT_DATA_DIR);
}

fs::path resolve_scenario_path(const std::string& arg) {
    const fs::path direct(arg);
    if (fs::exists(direct)) return direct;
    const fs::path bundled = resolve_data_dir() / "scenarios" / (arg + ".scenario");
    if (fs::exists(bundled)) return bundled;
    throw IngestError("scenario not found: '" + arg + "' (also tried " + bundled.string() + ")");
}

int cmd_fit(const std::string& dataset_path, bool as_json, const CommandIO& io) {
    const auto rows = load_processor_csv_file(dataset_path);
    const auto records = ingest_records(rows);
    const auto fit = fit_price_model(records);

    if (as_json) {
        nlohmann::ordered_json j;
        j["points"] = fit.points;
        j["slope_usd_per_point"] = fit.model.slope;
        j["intercept_usd"] = fit.model.intercept;
        j["residual_rms_usd"] = fit.residual_rms;
        io.out << j.dump(2) << "\n";
    } else {
        io.out << "points: " << fit.points << "\n"
               << "slope_usd_per_point: " << fmt_axis(fit.model.slope) << "\n"
               << "intercept_usd: " << fmt_axis(fit.model.intercept) << "\n"
               << "residual_rms_usd: " << fmt_axis(fit.residual_rms) << "\n";
    }
    return kExitOk;
}

int cmd_analyze(const std::string& scenario_arg, bool as_json,
                const std::optional<std::string>& out_path, const CommandIO& io) {
    const auto path = resolve_scenario_path(scenario_arg);
    auto report = build_report(load_scenario_file(path));

    for (const auto& warning : report.warnings) io.err << "warning: " << warning << "\n";

    if (as_json) {
        emit(render_json(report).dump(2) + "\n", out_path, io);
    } else {
        emit(render_text(report), out_path, io);
    }
    return kExitOk;
}

int cmd_sweep(const std::string& scenario_arg, const SweepOptions& options,
              const CommandIO& io) {
    const auto path = resolve_scenario_path(scenario_arg);
    const auto parsed = load_scenario_file(path);
    const Scenario& s = parsed.scenario;

    const SweepRange range = options.range.value_or(default_range(options.curve));
    const bool latency_axis = options.curve != "bandwidth-cost";
    if (latency_axis && (range.start < 0.0 || range.stop > 1.0)) {
        io.err << "warning: latency range [" << fmt_axis(range.start) << ", "
               << fmt_axis(range.stop) << "] extends beyond the 100% analysis window\n";
    }

    std::ostringstream csv;
    csv << "x,y,feasible,ms,cl,cb,g\n";

    if (options.curve == "latency-cost") {
        for (const auto& p : latency_cost_curve(s, range))
            csv_row(csv, options.curve, p.x, p.y, p.feasible, p.breakdown);
    } else if (options.curve == "equal-cost") {
        for (const auto& p : equal_cost_curve(s, range))
            csv_row(csv, options.curve, p.x, p.y, p.feasible, p.breakdown);
    } else if (options.curve == "bandwidth-cost") {
        double unit_cost = kDefaultBaselineUnitCost;
        if (options.unit_cost) {
            unit_cost = *options.unit_cost;
        } else if (s.fabric) {
            unit_cost = fabric_unit_cost(*s.fabric);
        } else {
            io.err << "warning: no fabric costs in the scenario and no --unit-cost given; "
                      "using the electrical baseline $"
                   << fmt_unit_cost(kDefaultBaselineUnitCost) << "/Gbps\n";
        }
        for (const auto& p : bandwidth_cost_line(s, unit_cost, range))
            csv_row(csv, options.curve, p.x, p.y, p.feasible, p.breakdown);
    } else if (options.curve == "gain-surface") {
        const SweepRange unit_range = options.unit_range.value_or(SweepRange{0.0, 3.0, 0.05});
        for (const auto& p : gain_surface(s, range, unit_range))
            csv_row(csv, options.curve, p.lat_incr, p.unit_cost, p.feasible, p.breakdown);
    } else {
        throw IngestError("unknown curve kind: " + options.curve);
    }

    emit(csv.str(), options.out_path, io);
    return kExitOk;
}

int cmd_workloads(const CommandIO& io) {
    const auto rows = load_workloads_csv(resolve_data_dir() / "workloads.csv");

    std::size_t name_width = 4;
    for (const auto& row : rows) name_width = std::max(name_width, row.name.size());

    io.out << "name";
    io.out << std::string(name_width - 4 + 2, ' ') << "smt  mfp     provenance\n";
    for (const auto& row : rows) {
        const std::string mfp = row.mfp.empty() ? "n/a" : row.mfp + "%";
        io.out << row.name << std::string(name_width - row.name.size() + 2, ' ') << row.smt
               << std::string(5 - row.smt.size(), ' ') << mfp
               << std::string(mfp.size() < 8 ? 8 - mfp.size() : 1, ' ') << row.provenance
               << "\n";
    }
    return kExitOk;
}

}  // namespace memcost::cli
