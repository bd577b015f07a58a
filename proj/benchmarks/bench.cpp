#include <benchmark/benchmark.h>

#include "homtor/f2.hpp"
#include "homtor/reps.hpp"
#include "homtor/rohlin.hpp"

using namespace homtor;

namespace {

rep::W2Bits pullback(bool sigma) {
  return {4, true, false, sigma, false, false, false};
}

void bm_solve_classes(benchmark::State& state) {
  int q = (int)state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(rep::solve_t3(q, pullback(false)));
}
BENCHMARK(bm_solve_classes)->Arg(3)->Arg(9)->Arg(15);

void bm_lambda_report(benchmark::State& state) {
  int q = (int)state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(rep::lambda_report(q, pullback(true)));
}
BENCHMARK(bm_lambda_report)->Arg(15);

void bm_brute_force(benchmark::State& state) {
  int q = (int)state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(rep::brute_force_classes(q, pullback(false), 4 * q));
}
BENCHMARK(bm_brute_force)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void bm_orbit_analysis(benchmark::State& state) {
  auto classes = rep::solve_t3(5, pullback(false));
  for (auto _ : state)
    for (const auto& c : classes)
      benchmark::DoNotOptimize(rep::orbit_analysis(c.rep));
}
BENCHMARK(bm_orbit_analysis);

void bm_conjugacy(benchmark::State& state) {
  auto classes = rep::solve_t3(9, pullback(false));
  const auto& a = classes.front().rep;
  const auto& b = classes.back().rep;
  for (auto _ : state) benchmark::DoNotOptimize(rep::are_conjugate(a, b));
}
BENCHMARK(bm_conjugacy);

void bm_form_sweep(benchmark::State& state) {
  for (auto _ : state)
    for (unsigned bits = 1; bits < 64; ++bits) {
      f2::TwoForm w(bits);
      benchmark::DoNotOptimize(f2::pfaffian(w));
      benchmark::DoNotOptimize(f2::klein_census(w));
      benchmark::DoNotOptimize(f2::pontrjagin_square(w, {true}));
    }
}
BENCHMARK(bm_form_sweep);

void bm_enumerate_consistent(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rohlin::enumerate_consistent(true));
}
BENCHMARK(bm_enumerate_consistent);

}  // namespace

BENCHMARK_MAIN();
