// Serial reference vs OpenMP path for each batched kernel. Arg 0 selects the
// execution mode (0 serial, 1 parallel); arg 1 is the batch size.

#include "sek3/batch.hpp"
#include "sek3/metrics.hpp"
#include "sek3/random.hpp"
#include "sek3/uncertainty.hpp"

#include <benchmark/benchmark.h>

#include <array>
#include <random>
#include <vector>

namespace {

using namespace sek3;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

std::vector<TangentVector> random_tangents(int k, std::int64_t n) {
  std::vector<TangentVector> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    CounterRng rng(7, static_cast<std::uint64_t>(i));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    VecX c(3 * (k + 1));
    for (Eigen::Index j = 0; j < c.size(); ++j) c[j] = u(rng);
    out.emplace_back(c);
  }
  return out;
}

void BM_BatchExp(benchmark::State& state) {
  const auto xs = random_tangents(2, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(batch_exp(xs, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_BatchLog(benchmark::State& state) {
  const auto gs = batch_exp(random_tangents(2, state.range(1)), Execution::Serial);
  for (auto _ : state) benchmark::DoNotOptimize(batch_log(gs, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_IntegrateMc(benchmark::State& state) {
  const std::array<TranslationBox, 2> boxes{
      TranslationBox{Vec3::Constant(-1.0), Vec3::Constant(1.0)},
      TranslationBox{Vec3::Constant(-2.0), Vec3::Constant(2.0)}};
  const auto f = [](const GroupElement& g) { return g.translations().squaredNorm(); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_mc(f, 2, boxes, state.range(1), 3, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_Sample(benchmark::State& state) {
  const ConcentratedGaussian d{GroupElement(2), 0.01 * MatX::Identity(9, 9), Side::Left};
  for (auto _ : state) benchmark::DoNotOptimize(sample(d, 5, state.range(1), mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int exec : {0, 1}) {
    for (int n : {1 << 10, 1 << 14}) b->Args({exec, n});
  }
  b->ArgNames({"parallel", "n"})->UseRealTime();
}

}  // namespace

BENCHMARK(BM_BatchExp)->Apply(sizes);
BENCHMARK(BM_BatchLog)->Apply(sizes);
BENCHMARK(BM_IntegrateMc)->Apply(sizes);
BENCHMARK(BM_Sample)->Apply(sizes);

BENCHMARK_MAIN();
