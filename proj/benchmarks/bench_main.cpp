#include <benchmark/benchmark.h>

#include "pascalpell/contfrac.hpp"
#include "pascalpell/pell.hpp"
#include "pascalpell/search.hpp"
#include "pascalpell/sieve.hpp"

using namespace pascalpell;

namespace {

// Sieved scan over n = 2..N on the quarter grid; the argument is N.
void BM_SearchC2(benchmark::State& state) {
  const EquationFamily f(2, Quartile::median);
  const auto sieves = default_sieves(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive(f, state.range(0), MedianDomain::quarters, sieves));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchC2)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_SearchC6(benchmark::State& state) {
  const EquationFamily f(6, Quartile::median);
  const auto sieves = state.range(1) ? default_sieves(f) : std::vector<SieveBinding>{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive(f, state.range(0), MedianDomain::quarters, sieves));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchC6)->Args({100000, 0})->Args({100000, 1})->Unit(benchmark::kMillisecond);

// Residue table construction by full p^2 enumeration.
void BM_SieveTable(benchmark::State& state) {
  const Polynomial p6 = curve_by_name("P_6");
  const auto modulus = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ResidueTable(p6, modulus).admissible_count());
}
BENCHMARK(BM_SieveTable)->Arg(7)->Arg(64)->Arg(256);

void BM_ContinuedFraction(benchmark::State& state) {
  const AlgebraicRoot root = AlgebraicRoot::parse("2^(2/3)");
  for (auto _ : state) benchmark::DoNotOptimize(expand(root, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ContinuedFraction)->Arg(20)->Arg(100);

void BM_PellGenerate(benchmark::State& state) {
  const PellClassSeq orbit = prop32_orbits().front();
  for (auto _ : state) benchmark::DoNotOptimize(generate(orbit, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PellGenerate)->Arg(10)->Arg(100);

void BM_FundamentalUnit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_unit(Integer(991)));
}
BENCHMARK(BM_FundamentalUnit);

}  // namespace

BENCHMARK_MAIN();
