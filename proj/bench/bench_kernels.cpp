// Serial reference kernels against their OpenMP counterparts.
//
// Run with OMP_NUM_THREADS set to compare thread counts; the serial
// variants never spawn threads.

#include <benchmark/benchmark.h>

#include "bsweep/datamule.hpp"
#include "bsweep/harness.hpp"
#include "bsweep/multi_planner.hpp"
#include "bsweep/simulator.hpp"

using namespace bsweep;

namespace {

struct SweepCase {
  Instance inst;
  MultiDeploymentPlan plan;
  SweepOptions opt;
};

SweepCase sweep_case(int n) {
  GenOptions g;
  g.region_side = 100.0;
  g.t = 20.0;
  SweepCase c{gen_instance(n, 17, g), {}, {}};
  c.plan = plan_bscmc(c.inst.curves, c.inst.v, c.inst.t);
  c.opt = {3.0 * c.inst.t, c.inst.t / 1000.0, 0.1};
  return c;
}

void BM_SweepParallel(benchmark::State& state) {
  const auto c = sweep_case(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_sweep(c.plan, c.inst.curves, c.opt).max_gap);
  }
}

void BM_SweepSerial(benchmark::State& state) {
  const auto c = sweep_case(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_sweep_serial(c.plan.components, c.inst.curves, c.opt).max_gap);
  }
}

struct MeetCase {
  std::vector<Segment> segs;
  DataMulePlan plan;
  std::vector<SensorStrategy> strategies;
  MeetingOptions opt;
};

MeetCase meet_case(int n) {
  GenOptions g;
  g.region_side = 60.0;
  g.t = 20.0;
  const Instance inst = gen_instance(n, 23, g);
  MeetCase c;
  c.segs = instance_segments(inst);
  c.plan = plan_mdmdg(c.segs, inst.v, inst.t);
  for (std::size_t i = 0; i < c.segs.size(); ++i) {
    c.strategies.push_back({SensorStrategy::Kind::RandomWalk, 0.5 * c.segs[i].length(), inst.v, i});
  }
  c.opt = {3.0 * inst.t, inst.t / 1000.0, 0.0, true};
  return c;
}

void BM_MeetingParallel(benchmark::State& state) {
  const auto c = meet_case(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_mdmdg(c.plan, c.segs, c.strategies, c.opt).max_gap);
  }
}

void BM_MeetingSerial(benchmark::State& state) {
  const auto c = meet_case(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_mdmdg_serial(c.plan, c.segs, c.strategies, c.opt).max_gap);
  }
}

void BM_Table(benchmark::State& state) {
  TableOptions opt;
  opt.trials = 20;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_table_n(opt, {25, 55}).size());
  }
  state.SetLabel(opt.parallel ? "openmp" : "serial");
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MeetingSerial)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeetingParallel)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
