// Serial reference vs OpenMP run of the verification suites. The suite names
// are passed by index so each benchmark shows up as e.g.
// BM_Suite/pleat-confluence/serial.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "ghom/verify.hpp"

namespace {

void run(benchmark::State& state, const std::string& suite, ghom::Execution execution,
         std::size_t max_vertices) {
  ghom::SuiteOptions o;
  o.execution = execution;
  o.max_vertices = max_vertices;
  std::size_t instances = 0;
  for (auto _ : state) {
    const auto r = ghom::run_suite(suite, o);
    if (!r.passed()) state.SkipWithError("suite reported failures");
    instances = r.instances;
    benchmark::DoNotOptimize(r.failures.data());
  }
  state.counters["instances"] = static_cast<double>(instances);
  state.counters["threads"] = execution == ghom::Execution::Serial ? 1 : omp_get_max_threads();
  state.SetItemsProcessed(static_cast<std::int64_t>(instances) * state.iterations());
}

void register_all() {
  // (suite, size) pairs that take tens to hundreds of milliseconds serially.
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"pleat-confluence", 4}, {"pleat-product", 4}, {"spider", 3},
      {"hom-loop", 3},         {"interchange", 3},   {"prune-confluence", 4},
      {"pleat-confluence", 5}};
  for (const auto& [suite, n] : cases) {
    for (auto [label, ex] : {std::pair{"serial", ghom::Execution::Serial},
                             std::pair{"parallel", ghom::Execution::Parallel}}) {
      const std::string name = "BM_Suite/" + suite + "/n" + std::to_string(n) + "/" + label;
      benchmark::RegisterBenchmark(name.c_str(), [suite = suite, n = n, ex = ex](benchmark::State& s) {
        run(s, suite, ex, n);
      })->Unit(benchmark::kMillisecond)->UseRealTime();
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  register_all();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
