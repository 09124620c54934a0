#include <benchmark/benchmark.h>

#include <random>

#include "isores/cyclotomic.hpp"
#include "isores/fiber.hpp"
#include "isores/strata.hpp"

using namespace isores;

namespace {

ResidueTuple ones(long k, unsigned p) {
  return ResidueTuple::exact(k, 1, std::vector<Cyclotomic>(p, Cyclotomic::rational(Rational(1))));
}

void BM_DegreeOrderKPoles(benchmark::State& state) {
  const long p = state.range(0);
  const auto sig = validate_signature(4, 4 * p - 11, 3, std::vector<long>(static_cast<std::size_t>(p), 4));
  for (auto _ : state) benchmark::DoNotOptimize(degree_generic(sig));
}
BENCHMARK(BM_DegreeOrderKPoles)->DenseRange(4, 14, 2);

void BM_FiberSixPoles(benchmark::State& state) {
  const auto sig = validate_signature(4, 13, 3, {4, 4, 4, 4, 4, 4});
  const auto rt = ones(4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(fiber_count(sig, rt).count);
}
BENCHMARK(BM_FiberSixPoles)->Unit(benchmark::kMillisecond);

void BM_ResonantSubsets(benchmark::State& state) {
  const auto rt = ones(4, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(resonant_subsets(rt).resonant.size());
}
BENCHMARK(BM_ResonantSubsets)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto field = make_field(static_cast<std::uint64_t>(state.range(0)));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<Rational> a(field->degree()), b(field->degree());
  for (auto& x : a) x = Rational(coeff(rng));
  for (auto& x : b) x = Rational(coeff(rng));
  const Cyclotomic x(field, a), y(field, b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(4)->Arg(12)->Arg(24)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
