// Serial reference against the OpenMP version for the scans and the sweep.
#include <benchmark/benchmark.h>

#include <cmath>

#include "shocklayer/config.hpp"
#include "shocklayer/gamma2.hpp"
#include "shocklayer/runner.hpp"

namespace {

void BM_SignScanSerial(benchmark::State& st) {
  const sl::GasModel g = sl::make_gas(2.0);
  for (auto _ : st) benchmark::DoNotOptimize(sl::sign_scan_serial(0.01, 200, 200, 1e-3, g));
}
void BM_SignScanParallel(benchmark::State& st) {
  const sl::GasModel g = sl::make_gas(2.0);
  for (auto _ : st) benchmark::DoNotOptimize(sl::sign_scan(0.01, 200, 200, 1e-3, g));
}
void BM_CornerScanSerial(benchmark::State& st) {
  const sl::Gamma2Polys p = sl::build_polynomials();
  for (auto _ : st) benchmark::DoNotOptimize(sl::corner_scan_serial(p, 200, 200));
}
void BM_CornerScanParallel(benchmark::State& st) {
  const sl::Gamma2Polys p = sl::build_polynomials();
  for (auto _ : st) benchmark::DoNotOptimize(sl::corner_scan(p, 200, 200));
}
void BM_Sweep(benchmark::State& st) {
  sl::RunSpec s = sl::parse_config("wedge = log_bullet:0.17632698070846498\nx_max = 2\nn_across = 12\n");
  s.sweep.epsilons = {0.04, 0.03, 0.02};
  s.sweep.n_across = {10, 12};
  s.sweep.xi0 = 0.5;
  s.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(sl::run_sweep(s));
}

}  // namespace

BENCHMARK(BM_SignScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignScanParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CornerScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CornerScanParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
