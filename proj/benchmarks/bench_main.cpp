#include "svirlab/fermion_fock.hpp"
#include "svirlab/fusion_ring.hpp"
#include "svirlab/jlo.hpp"
#include "svirlab/models.hpp"
#include "svirlab/ncg_pairing.hpp"
#include "svirlab/svir_module.hpp"

#include <benchmark/benchmark.h>

using namespace svirlab;

static void BM_DividedDifference(benchmark::State& state) {
  std::vector<double> x;
  for (int i = 0; i < state.range(0); ++i) x.push_back(0.37 * i + 0.1 * (i % 3));
  for (auto _ : state) benchmark::DoNotOptimize(divided_difference_exp(x));
}
BENCHMARK(BM_DividedDifference)->Arg(4)->Arg(8)->Arg(16);

static void BM_FockSpace(benchmark::State& state) {
  for (auto _ : state) {
    FockSpace f(3, FermionSector{Sector::R, ZeroModeVariant::plus}, HalfInt(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(f.module().dim());
  }
}
BENCHMARK(BM_FockSpace)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_LoopModel(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const LoopModel m = loop_model(d, 3);
    benchmark::DoNotOptimize(m.gens().dim());
  }
}
BENCHMARK(BM_LoopModel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SuperchargeIdentity(benchmark::State& state) {
  const LoopModel m = loop_model(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(supercharge_identity(m.gens()).residual);
}
BENCHMARK(BM_SuperchargeIdentity)->Unit(benchmark::kMillisecond);

static void BM_RamondIndex(benchmark::State& state) {
  for (auto _ : state) {
    const auto m = build_svir_module(Rational(1), Rational(1, 24), Sector::R, HalfInt(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(ramond_ground_index(m).index);
  }
}
BENCHMARK(BM_RamondIndex)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_EvenPairing(benchmark::State& state) {
  const auto st = make_triple(loop_model(2, 3).gens());
  const Mat p = characteristic_projection(st);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(even_pairing(st, p, k).value);
}
BENCHMARK(BM_EvenPairing)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_LadderOddPairing(benchmark::State& state) {
  const LadderModel lad = ladder_model(0.25, 40, 2);
  for (auto _ : state) benchmark::DoNotOptimize(odd_pairing(lad.st, lad.u, 6).value);
}
BENCHMARK(BM_LadderOddPairing)->Unit(benchmark::kMillisecond);

static void BM_CosetFusion(benchmark::State& state) {
  for (auto _ : state) {
    const CosetData cd = coset_sectors();
    benchmark::DoNotOptimize(disjointness_filter(cd, ramond_labels()).size());
  }
}
BENCHMARK(BM_CosetFusion)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
