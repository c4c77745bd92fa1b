#include <benchmark/benchmark.h>

#include "wap/analysis.hpp"
#include "wap/deciders.hpp"
#include "wap/graphic.hpp"
#include "wap/subshift.hpp"
#include "wap/words.hpp"

namespace {

void BM_FixedPointStream(benchmark::State& state) {
  const auto m = wap::Morphism::parse("0001/1011");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto w = wap::fixed_point_stream(m, 0);
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < n; ++i) zeros += *w.next() == 0 ? 1 : 0;
    benchmark::DoNotOptimize(zeros);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_FixedPointStream)->Arg(1 << 16)->Arg(1 << 20);

void BM_NamedStream(benchmark::State& state) {
  static const char* const names[] = {"paperfolding", "thue_morse", "prop12", "prop31",
                                      "prop34"};
  const char* name = names[state.range(0)];
  state.SetLabel(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wap::prefix(wap::named_word(name), 1 << 18));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * (1 << 18));
}
BENCHMARK(BM_NamedStream)->DenseRange(0, 4);

void BM_Toeplitz(benchmark::State& state) {
  const auto pattern = wap::ToeplitzPattern::parse("0?1?");
  for (auto _ : state) {
    benchmark::DoNotOptimize(wap::prefix(wap::toeplitz_stream(pattern), 1 << 18));
  }
}
BENCHMARK(BM_Toeplitz);

void BM_Discrepancy(benchmark::State& state) {
  const auto u = wap::prefix(wap::named_word("paperfolding"), 1 << 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wap::DiscrepancyProfile::compute(u, wap::Rational(1, 2)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * (1 << 20));
}
BENCHMARK(BM_Discrepancy);

void BM_WitnessSearch(benchmark::State& state) {
  wap::WitnessOptions o;
  o.prefix = static_cast<std::size_t>(state.range(0));
  o.max_denominator = 8;
  const auto u = wap::prefix(wap::named_word("paperfolding"), o.prefix);
  for (auto _ : state) benchmark::DoNotOptimize(wap::wap_witness_search(u, o));
}
BENCHMARK(BM_WitnessSearch)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_TernaryWitnessSearch(benchmark::State& state) {
  wap::WitnessOptions o;
  o.prefix = 100000;
  o.max_denominator = 4;
  o.min_hits = 20;
  const auto u = wap::prefix(wap::named_word("prop34"), o.prefix);
  for (auto _ : state) benchmark::DoNotOptimize(wap::wap_witness_search(u, o));
}
BENCHMARK(BM_TernaryWitnessSearch)->Unit(benchmark::kMillisecond);

void BM_Balance(benchmark::State& state) {
  const auto u = wap::prefix(wap::named_word("thue_morse"), 1 << 16);
  for (auto _ : state) benchmark::DoNotOptimize(wap::balance_profile(u, 256));
}
BENCHMARK(BM_Balance)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  wap::CensusOptions o;
  o.k = static_cast<std::size_t>(state.range(0));
  o.prefix = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(wap::enumerate_census(o));
}
BENCHMARK(BM_Census)->Args({4, 0})->Args({5, 0})->Args({4, 10000})->Unit(
    benchmark::kMillisecond);

void BM_OrbitBuilder(benchmark::State& state) {
  wap::OrbitOptions o;
  o.depth = 4;
  o.budget = 100000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wap::build_wap_orbit_point(wap::named_word("paperfolding"), wap::Rational(1, 2), o));
  }
}
BENCHMARK(BM_OrbitBuilder)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
