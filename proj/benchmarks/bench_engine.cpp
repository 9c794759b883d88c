#include <benchmark/benchmark.h>

#include "toricres/chow_symbolic.hpp"
#include "toricres/dual_complex.hpp"
#include "toricres/obstruction.hpp"
#include "toricres/refinement.hpp"
#include "toricres/toric_resolution.hpp"

using namespace toricres;

namespace {

DualComplex triangle() { return DualComplex::build({"1", "2", "3"}, {{"1", "2", "3"}}); }

DualComplex square_of_triangles() {
  return DualComplex::build({"1", "2", "3", "4"}, {{"1", "2", "3"}, {"1", "3", "4"}});
}

Refinement resolved(const DualComplex& c, long long r) {
  const auto initial = LocalFanState::initial(c, r);
  LocalFanState terminal = initial;
  default_schedule(initial, &terminal);
  return Refinement::from_state(terminal);
}

void BM_DefaultSchedule(benchmark::State& st) {
  const auto initial = LocalFanState::initial(triangle(), st.range(0));
  for (auto _ : st) {
    LocalFanState terminal = initial;
    benchmark::DoNotOptimize(default_schedule(initial, &terminal));
  }
}
BENCHMARK(BM_DefaultSchedule)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Tables(benchmark::State& st) {
  const auto ref = resolved(square_of_triangles(), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(compute_tables(ref));
}
BENCHMARK(BM_Tables)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& st) {
  const auto ref = resolved(square_of_triangles(), st.range(0));
  const auto tables = compute_tables(ref);
  const auto cycle = SymbolicOneCycle::full_generic(ref);
  for (auto _ : st) {
    benchmark::DoNotOptimize(verify_wall_identity(ref, tables));
    benchmark::DoNotOptimize(verify_key_formula(ref, tables, cycle));
  }
}
BENCHMARK(BM_Verify)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
