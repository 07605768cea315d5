#include <benchmark/benchmark.h>

#include "wilson/prime_factor.hpp"
#include "wilson/residue_ring.hpp"
#include "wilson/wilson.hpp"

using namespace wilson;

namespace {

const char* const kPolys[] = {"x^2+1", "x^2-2", "x^2+x+1", "x^4+1"};

void BM_FactorPrime(benchmark::State& state) {
  const auto o = make_order(kPolys[state.range(0)]);
  const auto p = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(factor_prime(o, p));
  state.SetLabel(kPolys[state.range(0)]);
}
BENCHMARK(BM_FactorPrime)->ArgsProduct({{0, 1, 2, 3}, {2, 101, 1000003}});

// Brute-force product over (o/a)^x against the closed form on the same ideal.
void BM_UnitProduct(benchmark::State& state) {
  const auto o = make_order("x^2+1");
  const auto R = build_residue_ring(o, parse_ideal(o, "2^" + std::to_string(state.range(0)) + "; 5^2@1"));
  for (auto _ : state) benchmark::DoNotOptimize(unit_product(R));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(R.size()));
}
BENCHMARK(BM_UnitProduct)->DenseRange(2, 10, 4)->Unit(benchmark::kMillisecond);

void BM_ClassifyGlobal(benchmark::State& state) {
  const auto o = make_order("x^2+1");
  const auto a = parse_ideal(o, "2^" + std::to_string(state.range(0)) + "; 5^2@1");
  for (auto _ : state) benchmark::DoNotOptimize(classify_global(o, a));
}
BENCHMARK(BM_ClassifyGlobal)->DenseRange(2, 10, 4)->Unit(benchmark::kMicrosecond);

void BM_ClassifyPastCap(benchmark::State& state) {
  const auto o = make_order("x^4+1");
  const auto a = parse_ideal(o, "2^40; 3^12@0; 17^5@2");
  for (auto _ : state) benchmark::DoNotOptimize(classify_global(o, a, 0));
}
BENCHMARK(BM_ClassifyPastCap)->Unit(benchmark::kMicrosecond);

void BM_RingMul(benchmark::State& state) {
  const auto o = make_order(kPolys[state.range(0)]);
  const auto R = build_residue_ring(o, parse_ideal(o, "3^4"));
  auto x = R.reduce(o.theta());
  const auto y = R.reduce(add(o, o.theta(), o.from_integer(2)));
  for (auto _ : state) {
    x = R.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
  state.SetLabel(kPolys[state.range(0)]);
}
BENCHMARK(BM_RingMul)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
