#include <benchmark/benchmark.h>

#include "slicestab/chern.hpp"
#include "slicestab/stab_a1.hpp"
#include "slicestab/stab_general.hpp"

using namespace slicestab;

namespace {

FixedLocus a1_locus(int l) {
  return FixedLocus(SliceSpec(CartanDatum::make('A', 1), std::vector<int>(l, 1), Coweight{l % 2}));
}

void BM_FixedLocus(benchmark::State& state) {
  auto a2 = CartanDatum::make('A', 2);
  const std::vector<int> lambda(static_cast<size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(FixedLocus(SliceSpec(a2, lambda, {0, 0})).size());
}
BENCHMARK(BM_FixedLocus)->Arg(3)->Arg(6);

void BM_StabMatrix(benchmark::State& state) {
  FixedLocus locus = a1_locus(static_cast<int>(state.range(0)));
  const auto ch = Chamber::dominant(locus.spec().cartan_ptr());
  const auto pol = repelling_polarization(locus, ch);
  for (auto _ : state) benchmark::DoNotOptimize(stab_matrix(locus, ch, pol).entries.size());
}
BENCHMARK(BM_StabMatrix)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Duality(benchmark::State& state) {
  FixedLocus locus = a1_locus(static_cast<int>(state.range(0)));
  const auto ch = Chamber::dominant(locus.spec().cartan_ptr());
  const auto pol = repelling_polarization(locus, ch);
  for (auto _ : state) benchmark::DoNotOptimize(verify_duality(locus, ch, pol).ok());
}
BENCHMARK(BM_Duality)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_MultOracle(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  FixedLocus locus = a1_locus(l);
  const auto ch = Chamber::dominant(locus.spec().cartan_ptr());
  const auto pol = repelling_polarization(locus, ch);
  const auto stab = stab_matrix(locus, ch, pol);
  for (auto _ : state) benchmark::DoNotOptimize(mult_matrix_via_localization(locus, {'L', l / 2}, stab).entries.size());
}
BENCHMARK(BM_MultOracle)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_StabModH2(benchmark::State& state) {
  auto cd = CartanDatum::make('A', static_cast<int>(state.range(0)));
  const std::vector<int> lambda(static_cast<size_t>(state.range(0)) + 1, 1);
  FixedLocus locus(SliceSpec(cd, lambda, Coweight(static_cast<size_t>(state.range(0)), 0)));
  const auto ch = Chamber::dominant(cd);
  const auto pol = repelling_polarization(locus, ch);
  for (auto _ : state) benchmark::DoNotOptimize(stab_mod_h2(locus, ch, pol).entries.size());
}
BENCHMARK(BM_StabModH2)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
