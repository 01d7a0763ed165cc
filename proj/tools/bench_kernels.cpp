// OpenMP kernels against their serial references on the inputs the pipeline
// actually produces.

#include <benchmark/benchmark.h>

#include "qshell/homology.hpp"
#include "qshell/kernels.hpp"
#include "qshell/qcomplex.hpp"
#include "qshell/qmatroid.hpp"

using namespace qshell;

namespace {

// Facets of U_2(2,5) in tower order, a shelling, so neither version stops
// early.
const std::vector<Subspace>& planes_of_f2_5() {
  static const auto planes = enumerate_grassmannian(Ambient(2, 5), 2);
  return planes;
}

template <WitnessTable (*F)(const Ambient&, const std::vector<Subspace>&)>
void BM_shelling(benchmark::State& state) {
  const Ambient amb(2, 5);
  const auto& facets = planes_of_f2_5();
  for (auto _ : state) benchmark::DoNotOptimize(F(amb, facets));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(facets.size()));
}

template <RankSweep (*F)(const SubspaceIndex&, const std::vector<int>&)>
void BM_rank_sweep(benchmark::State& state) {
  const auto m = uniform_matroid(2, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(F(m.index(), m.table()));
}

template <OrderComplex (*F)(const Poset&)>
void BM_order_complex(benchmark::State& state) {
  const auto poset = inclusion_poset(q_sphere(Ambient(static_cast<int>(state.range(0)), 4)).puncture());
  for (auto _ : state) benchmark::DoNotOptimize(F(poset));
}

template <SnfResult (*F)(IntMatrix)>
void BM_snf(benchmark::State& state) {
  const auto k = order_complex(inclusion_poset(q_sphere(Ambient(2, 4)).puncture()));
  const auto m = boundary_matrix(k, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(m));
}

}  // namespace

BENCHMARK(BM_shelling<kernels::shelling_witnesses>)->Name("shelling_witnesses/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shelling<reference::shelling_witnesses>)->Name("shelling_witnesses/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_sweep<kernels::rank_sweep>)->Name("rank_sweep/omp")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_sweep<reference::rank_sweep>)->Name("rank_sweep/serial")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_order_complex<kernels::order_complex>)->Name("order_complex/omp")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_order_complex<reference::order_complex>)->Name("order_complex/serial")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_snf<kernels::smith_normal_form>)->Name("smith_normal_form/omp")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_snf<reference::smith_normal_form>)->Name("smith_normal_form/serial")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
