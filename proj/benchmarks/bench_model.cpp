#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "memcost/cost_engine.hpp"
#include "memcost/pricing.hpp"
#include "memcost/sweep.hpp"

using namespace memcost;

namespace {

Scenario rack_scenario() {
    Scenario s;
    s.processor = {"E5-class-400", 400.0, 68.0};
    s.workload = {"SPEC-INT-ST", 1, 0.20};
    s.memory = {128.0, 7.125, 0.5, 0.1};
    s.latency = {75.0, 6.0, 5.0, 0.0, 0.0, 0.0, 0.0};
    s.pricing = default_pricing_model();
    s.fabric = FabricCost{1.0, 0.5, 300.0, 100.0};
    return s;
}

std::vector<ProcessorRecord> synthetic_records(std::size_t n) {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> t_dist(90.0, 597.0);
    std::normal_distribution<double> noise(0.0, 50.0);
    std::vector<ProcessorRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = t_dist(rng);
        records.push_back({"m" + std::to_string(i), t,
                           std::max(1.0, 4.85 * t - 324.0 + noise(rng))});
    }
    return records;
}

void BM_AnalyzeScenario(benchmark::State& state) {
    const Scenario s = rack_scenario();
    for (auto _ : state) {
        auto analysis = analyze_scenario(s);
        benchmark::DoNotOptimize(analysis);
    }
}
BENCHMARK(BM_AnalyzeScenario);

void BM_EqualCostCurve(benchmark::State& state) {
    const Scenario s = rack_scenario();
    const SweepRange range{0.0, 1.0, 1.0 / static_cast<double>(state.range(0))};
    for (auto _ : state) {
        auto curve = equal_cost_curve(s, range);
        benchmark::DoNotOptimize(curve);
    }
    state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}
BENCHMARK(BM_EqualCostCurve)->Arg(20)->Arg(1000)->Arg(100000);

void BM_GainSurface(benchmark::State& state) {
    const Scenario s = rack_scenario();
    const double step = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto grid = gain_surface(s, {0.0, 1.0, step}, {0.0, 3.0, 3.0 * step});
        benchmark::DoNotOptimize(grid);
    }
}
BENCHMARK(BM_GainSurface)->Arg(20)->Arg(200);

void BM_FitPriceModel(benchmark::State& state) {
    const auto records = synthetic_records(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto fit = fit_price_model(records);
        benchmark::DoNotOptimize(fit);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitPriceModel)->Arg(54)->Arg(5000);

void BM_IngestRecords(benchmark::State& state) {
    const auto records = synthetic_records(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto deduped = ingest_records(records);
        benchmark::DoNotOptimize(deduped);
    }
}
BENCHMARK(BM_IngestRecords)->Arg(54)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
