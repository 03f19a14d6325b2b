// Serial reference vs OpenMP batch evaluation. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "lpakk/batch.hpp"
#include "lpakk/random.hpp"

namespace {

std::vector<lpakk::Graph> make_graphs(std::size_t n) {
  lpakk::Rng rng(1);
  std::vector<lpakk::Graph> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(lpakk::random_graph(rng, {4, 12, 3, 0.3, 0.1}));
  return out;
}

std::vector<lpakk::IntMatrix> make_matrices(std::size_t n) {
  lpakk::Rng rng(2);
  std::vector<lpakk::IntMatrix> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(lpakk::random_matrix(rng, 20, 20, -10, 10));
  return out;
}

void BM_InvariantsSerial(benchmark::State& state) {
  const auto graphs = make_graphs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpakk::invariants_serial(graphs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_InvariantsParallel(benchmark::State& state) {
  const auto graphs = make_graphs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpakk::invariants_parallel(graphs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = lpakk::parallel_threads();
}

void BM_SnfSerial(benchmark::State& state) {
  const auto ms = make_matrices(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpakk::snf_serial(ms));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SnfParallel(benchmark::State& state) {
  const auto ms = make_matrices(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpakk::snf_parallel(ms));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = lpakk::parallel_threads();
}

}  // namespace

BENCHMARK(BM_InvariantsSerial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvariantsParallel)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnfSerial)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnfParallel)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
