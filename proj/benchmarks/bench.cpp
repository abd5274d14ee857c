#include <benchmark/benchmark.h>

#include "khsq/jones.hpp"
#include "khsq/report.hpp"

namespace {

using namespace khsq;

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFig8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* kT34 =
    "X(12,1,13,2) X(7,2,8,3) X(8,13,9,14) X(3,14,4,15) X(4,9,5,10) "
    "X(15,10,16,11) X(16,5,1,6) X(11,6,12,7)";

void bm_complex_build(benchmark::State& state, const char* pd) {
  Diagram d(parse_pd(pd));
  for (auto _ : state) benchmark::DoNotOptimize(Complex(d));
}
BENCHMARK_CAPTURE(bm_complex_build, trefoil, kTrefoil);
BENCHMARK_CAPTURE(bm_complex_build, figure8, kFig8);
BENCHMARK_CAPTURE(bm_complex_build, t34, kT34);

void bm_kh_z(benchmark::State& state, const char* pd) {
  Diagram d(parse_pd(pd));
  Complex cx(d);
  for (auto _ : state) benchmark::DoNotOptimize(kh_z(cx));
}
BENCHMARK_CAPTURE(bm_kh_z, trefoil, kTrefoil);
BENCHMARK_CAPTURE(bm_kh_z, figure8, kFig8);
BENCHMARK_CAPTURE(bm_kh_z, t34, kT34);

void bm_sq_maps(benchmark::State& state, const char* pd, int j) {
  Diagram d(parse_pd(pd));
  Complex cx(d);
  for (auto _ : state) benchmark::DoNotOptimize(sq_maps(cx, j));
}
BENCHMARK_CAPTURE(bm_sq_maps, trefoil_j5, kTrefoil, 5);
BENCHMARK_CAPTURE(bm_sq_maps, t34_j11, kT34, 11);

void bm_jones(benchmark::State& state, const char* pd) {
  Diagram d(parse_pd(pd));
  for (auto _ : state) benchmark::DoNotOptimize(jones_state_sum(d));
}
BENCHMARK_CAPTURE(bm_jones, t34, kT34);

void bm_full_report(benchmark::State& state, const char* pd) {
  Diagram d(parse_pd(pd));
  ComputeOptions opt;
  opt.with_homotopy = true;
  opt.threads = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_report("bench", d, opt));
}
BENCHMARK_CAPTURE(bm_full_report, t34, kT34);

} // namespace

BENCHMARK_MAIN();
