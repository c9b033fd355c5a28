#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "dynn/braid.hpp"
#include "dynn/coords.hpp"
#include "dynn/random.hpp"
#include "dynn/reduction.hpp"
#include "dynn/tracer.hpp"

namespace {

constexpr std::uint64_t kSeed = 0x5eed;

std::vector<dynn::DynnikovCoordinates> corpus(int punctures,
                                              std::int64_t range,
                                              std::size_t size) {
  dynn::Sampler sampler(dynn::mix_seed(
      kSeed, static_cast<std::uint64_t>(punctures),
      static_cast<std::uint64_t>(range)));
  std::vector<dynn::DynnikovCoordinates> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i)
    out.push_back(sampler.lamination(punctures, range));
  return out;
}

void BM_CountComponents(benchmark::State& state) {
  const int punctures = static_cast<int>(state.range(0));
  const std::int64_t range = state.range(1);
  const auto inputs = corpus(punctures, range, 64);
  std::size_t k = 0;
  for (auto _ : state) {
    const dynn::CountResult r = dynn::count_components(inputs[k++ % inputs.size()]);
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_CountComponents)
    ->Args({10, 10})
    ->Args({10, 1000})
    ->Args({10, 100000})
    ->Args({100, 10})
    ->Args({100, 1000});

void BM_OracleCount(benchmark::State& state) {
  const int punctures = static_cast<int>(state.range(0));
  const std::int64_t range = state.range(1);
  const auto inputs = corpus(punctures, range, 64);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dynn::oracle_count(inputs[k++ % inputs.size()]));
  }
}
BENCHMARK(BM_OracleCount)->Args({6, 10})->Args({8, 20})->Args({10, 100});

void BM_ApplyWord(benchmark::State& state) {
  const int punctures = static_cast<int>(state.range(0));
  const int length = static_cast<int>(state.range(1));
  dynn::Sampler sampler(kSeed);
  const dynn::DynnikovCoordinates start = sampler.lamination(punctures, 10);
  const dynn::BraidWord word = sampler.word(punctures, length);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dynn::apply_word(start, word));
  }
}
BENCHMARK(BM_ApplyWord)->Args({10, 50})->Args({100, 50});

void BM_Extend(benchmark::State& state) {
  const int punctures = static_cast<int>(state.range(0));
  const auto inputs = corpus(punctures, 1000, 64);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dynn::extend(inputs[k++ % inputs.size()]));
  }
}
BENCHMARK(BM_Extend)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
