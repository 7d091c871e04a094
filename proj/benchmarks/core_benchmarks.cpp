#include <benchmark/benchmark.h>

#include <vector>

#include "igk/igk.hpp"

namespace {

void BM_FisherGaussianGrid(benchmark::State& state) {
  const auto model = igk::builtins::gaussian_grid(5.0, static_cast<std::size_t>(state.range(0)));
  const std::vector<double> xi{0.3, 1.2};
  for (auto _ : state) benchmark::DoNotOptimize(igk::fisher_metric(model, xi));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FisherGaussianGrid)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_Pushforward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto source = igk::SampleSpace::indexed(n);
  const auto target = igk::SampleSpace::indexed(n / 2);
  std::vector<double> entries(n * (n / 2), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * (n / 2) + i % (n / 2)] = 0.5;
    entries[i * (n / 2) + (i + 1) % (n / 2)] += 0.5;
  }
  const igk::MarkovKernel K(source, target, std::move(entries));
  const igk::Measure mu(source, std::vector<double>(n, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(igk::pushforward(K, mu));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Pushforward)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_DslParse(benchmark::State& state) {
  const igk::dsl::ParseOptions options{2, 2, false};
  for (auto _ : state)
    benchmark::DoNotOptimize(igk::dsl::parse("exp(-(x1-t1)^2/(2*t2^2))/((2*pi)^0.5*t2) + log(1+x2^2)*sin(t1)", options));
}
BENCHMARK(BM_DslParse);

void BM_DslEval(benchmark::State& state) {
  const igk::dsl::ParseOptions options{2, 2, false};
  const auto e = igk::dsl::parse("exp(-(x1-t1)^2/(2*t2^2))/((2*pi)^0.5*t2) + log(1+x2^2)*sin(t1)", options);
  const std::vector<double> x{0.4, -1.1}, t{0.2, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(igk::dsl::eval(e, x, t));
}
BENCHMARK(BM_DslEval);

}  // namespace

BENCHMARK_MAIN();
