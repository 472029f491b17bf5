#include <benchmark/benchmark.h>

#include <cmath>

#include "etcs/blocks.hpp"
#include "etcs/etafn.hpp"
#include "etcs/hypgeo.hpp"
#include "etcs/matching.hpp"
#include "etcs/ratarith.hpp"

namespace {

using namespace etcs;

void BM_EnumerateFullTable(benchmark::State& state) {
  const auto& cat = blocks::default_catalog();
  for (auto _ : state) {
    auto rows = matching::enumerate_examples(cat, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_EnumerateFullTable)->Arg(1)->Arg(4);

void BM_DedekindSum(benchmark::State& state) {
  const long long n = state.range(0);
  long long k = 1;
  for (auto _ : state) {
    auto s = ratarith::dedekind_sum(k, n);
    benchmark::DoNotOptimize(s);
    k = (k + 7) % n;
  }
}
BENCHMARK(BM_DedekindSum)->Arg(50)->Arg(200)->Arg(1000);

void BM_DGamma(benchmark::State& state) {
  const auto& block = blocks::block_by_id(blocks::default_catalog(),
                                          static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto d = blocks::d_gamma(block, 1);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DGamma)->Arg(12)->Arg(13);

void BM_EtaLog(benchmark::State& state) {
  // A shallow argument that needs several reduction steps.
  const etafn::Complex tau(-1.0L / 3, 1.0L / (15 * std::sqrt(2.0L)));
  for (auto _ : state) {
    auto v = etafn::eta_log(tau, 1e-12L);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_EtaLog);

void BM_FValue(benchmark::State& state) {
  for (auto _ : state) {
    auto f = etafn::f_value(5, 2, std::sqrt(2.0L), 1e-12L);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FValue);

void BM_PolygonIdentity(benchmark::State& state) {
  const auto g = gluing::make_gluing(3, 5, 1, -1, 1, 1, 10, -5);
  for (auto _ : state) {
    auto id = hypgeo::polygon_identity_check(g);
    benchmark::DoNotOptimize(id);
  }
}
BENCHMARK(BM_PolygonIdentity);

}  // namespace

BENCHMARK_MAIN();
