// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick a
// family; OMP_NUM_THREADS controls the parallel variants.

#include "fpt/infdiv.hpp"
#include "fpt/models.hpp"
#include "fpt/nc_partition.hpp"
#include "fpt/transform.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

fpt::Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? fpt::Execution::serial : fpt::Execution::parallel;
}

void set_label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "parallel"); }

fpt::MomentFunctional random_moments(int letters, int order) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  fpt::MomentFunctional mf(fpt::Alphabet::numbered("a", letters), order);
  for (std::size_t i = 1; i < mf.size(); ++i) {
    fpt::Rational r(num(rng), den(rng));
    r.canonicalize();
    mf.values()[i] = r;
  }
  return mf;
}

void BM_EnumerateNc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fpt::enumerate_nc(n, mode(state)));
  state.counters["partitions"] = static_cast<double>(fpt::catalan(n));
  set_label(state);
}
BENCHMARK(BM_EnumerateNc)->ArgsProduct({{10, 12, 13}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MomentsToCumulantsExact(benchmark::State& state) {
  const auto mf = random_moments(2, static_cast<int>(state.range(0)));
  fpt::partition_table(mf.order());
  for (auto _ : state) benchmark::DoNotOptimize(fpt::moments_to_cumulants(mf, mode(state)));
  set_label(state);
}
BENCHMARK(BM_MomentsToCumulantsExact)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CumulantsToMomentsFloat(benchmark::State& state) {
  const auto cf = fpt::to_float(fpt::moments_to_cumulants(random_moments(2, static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(fpt::cumulants_to_moments(cf, mode(state)));
  set_label(state);
}
BENCHMARK(BM_CumulantsToMomentsFloat)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_GramMatrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto base = fpt::cumulants_to_moments(fpt::semicircle_family(fpt::CovarianceMatrix::identity(2), 2 * d));
  const auto cf = fpt::compound_free_poisson(2, base, 2 * d);
  for (auto _ : state) benchmark::DoNotOptimize(fpt::gram_matrix(cf, 2, d, mode(state)));
  set_label(state);
}
BENCHMARK(BM_GramMatrix)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
