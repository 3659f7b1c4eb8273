#include <benchmark/benchmark.h>

#include <cstdint>

#include "truncmul/attack.hpp"
#include "truncmul/lattice2d.hpp"
#include "truncmul/protocol.hpp"

using namespace truncmul;

namespace {

// Parameter shapes keyed by l; m = q = l/4 and r = min(129, l/8).
ProtocolParams shaped_params(unsigned l, std::uint64_t seed) {
  const unsigned m = l / 4, q = l / 4;
  const unsigned r = std::min(129u, l / 8);
  return gen_params(seed, l, m, q, r);
}

AttackInput observed(const ProtocolParams& params, std::uint64_t seed) {
  const auto t = exchange(seed, params);
  return {params.z, params.p, params.q, params.m, t.U, false};
}

void BM_Exchange(benchmark::State& state) {
  const auto params = shaped_params(static_cast<unsigned>(state.range(0)), 1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exchange(seed++, params));
  }
}
BENCHMARK(BM_Exchange)->RangeMultiplier(2)->Range(256, 4096);

void BM_GaussReduce(benchmark::State& state) {
  const auto params = shaped_params(static_cast<unsigned>(state.range(0)), 1);
  const auto problem = build_problem(observed(params, 1));
  const auto basis = problem.family.basis(problem.p);
  std::size_t iterations = 0;
  for (auto _ : state) {
    const auto red = gauss_reduce(basis, problem.form);
    iterations = red.iterations;
    benchmark::DoNotOptimize(red);
  }
  state.counters["passes"] = static_cast<double>(iterations);
}
BENCHMARK(BM_GaussReduce)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMicrosecond);

void BM_RectSearch(benchmark::State& state) {
  const auto params = shaped_params(static_cast<unsigned>(state.range(0)), 2);
  const auto problem = build_problem(observed(params, 2));
  const auto red = gauss_reduce(problem.family.basis(problem.p), problem.form);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rect_search(red.basis, problem.family.v0, problem.bounds.b1, problem.bounds.b2));
  }
}
BENCHMARK(BM_RectSearch)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMicrosecond);

// The full-size configuration: l=2048, m=q=512, r=129.
void BM_RecoverPreimagesFull(benchmark::State& state) {
  const auto params = gen_params(7, 2048, 512, 512, 129);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const auto in = observed(params, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(recover_preimages(in));
  }
}
BENCHMARK(BM_RecoverPreimagesFull)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
