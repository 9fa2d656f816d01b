#include <benchmark/benchmark.h>

#include "parry/census.hpp"
#include "parry/classify.hpp"
#include "parry/criteria.hpp"
#include "parry/orbit.hpp"
#include "parry/power_sums.hpp"
#include "parry/roots.hpp"
#include "parry/spectrum.hpp"

using namespace parry;

namespace {

const IntPolynomial& lehmer12() {
  static const IntPolynomial p = parse_polynomial("x^12-x^10-x^9+x^4+x^3-x-1");
  return p;
}

void BM_IsolateRoots(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(isolate_roots(lehmer12()));
}
BENCHMARK(BM_IsolateRoots)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(analyze(lehmer12()));
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

void BM_MinPolyOfPower(benchmark::State& st) {
  const auto k = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(min_poly_of_power(lehmer12(), k));
}
BENCHMARK(BM_MinPolyOfPower)->Arg(2)->Arg(8)->Arg(16)->Arg(47)->Unit(benchmark::kMillisecond);

// beta^3 of x^3-5x^2-2x+5 is Parry with a periodic expansion
void BM_GreedyOrbit(benchmark::State& st) {
  const IntPolynomial p = parse_polynomial("x^3-5x^2-2x+5");
  const IntPolynomial q = min_poly_of_power(p, 3);
  for (auto _ : st) benchmark::DoNotOptimize(greedy_expansion(q, 50000));
}
BENCHMARK(BM_GreedyOrbit)->Unit(benchmark::kMillisecond);

void BM_Akiyama(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(akiyama_test(lehmer12(), 10000));
}
BENCHMARK(BM_Akiyama)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& st) {
  const IntPolynomial p = parse_polynomial("x^3-5x^2-2x+5");
  for (auto _ : st) {
    clear_status_cache();
    benchmark::DoNotOptimize(parry_spectrum(p));
  }
}
BENCHMARK(BM_Spectrum)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& st) {
  for (auto _ : st) {
    clear_status_cache();
    benchmark::DoNotOptimize(enumerate_census(2, st.range(0)));
  }
}
BENCHMARK(BM_Census)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
