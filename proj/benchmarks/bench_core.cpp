#include <benchmark/benchmark.h>

#include "circumnav/analysis.hpp"
#include "circumnav/simulation.hpp"

using namespace circumnav;

static void BM_ScheduleEvalSpatial(benchmark::State& state)
{
    const auto s = RotationSchedule::spatial(1.0, 1.0, 0.0625);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.eval(t));
        t += 0.01;
    }
}
BENCHMARK(BM_ScheduleEvalSpatial);

static void BM_TransitionMatrixPeriod(benchmark::State& state)
{
    const auto s = RotationSchedule::spatial(1.0, 1.0, 0.0625);
    for (auto _ : state)
        benchmark::DoNotOptimize(s.transition_matrix(0.0, s.period(), 1e-3));
}
BENCHMARK(BM_TransitionMatrixPeriod);

static void BM_SimulateBaselineSecond(benchmark::State& state)
{
    ScenarioConfig cfg = baseline_config();
    cfg.duration = 1.0;
    cfg.sample_every = 1000;
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate(cfg));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(cfg.duration / cfg.dt));
}
BENCHMARK(BM_SimulateBaselineSecond);

static void BM_AnalyzeBaseline(benchmark::State& state)
{
    ScenarioConfig cfg = baseline_config();
    cfg.duration = 20.0;
    const Trajectory traj = simulate(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze(traj));
}
BENCHMARK(BM_AnalyzeBaseline);

BENCHMARK_MAIN();
