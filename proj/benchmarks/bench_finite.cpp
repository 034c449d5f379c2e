#include <benchmark/benchmark.h>

#include <memory>

#include "pompeiu/finite_pompeiu.hpp"

namespace {

using namespace pompeiu;

std::shared_ptr<const CosetSpace> dihedral_space(std::size_t n) {
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::dihedral(n));
  const Element s = g->find_label("s").value();
  return std::make_shared<const CosetSpace>(g, std::vector<Element>{s});
}

std::shared_ptr<const CosetSpace> cyclic_space(std::size_t n) {
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
  return std::make_shared<const CosetSpace>(g, std::vector<Element>{});
}

void BM_SymmetricGroupClosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(FiniteGroup::symmetric(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SymmetricGroupClosure)->Arg(4)->Arg(5)->Arg(6);

void BM_SphericalFunctionsCyclic(benchmark::State& state) {
  const auto space = cyclic_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto algebra = HeckeAlgebra::create(space);
    benchmark::DoNotOptimize(spherical_functions(*algebra));
  }
}
BENCHMARK(BM_SphericalFunctionsCyclic)->Arg(8)->Arg(12)->Arg(20);

void BM_OracleDihedral(benchmark::State& state) {
  const FiniteAnalyzer analyzer(dihedral_space(static_cast<std::size_t>(state.range(0))));
  const std::vector<std::size_t> e{0, 1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(analyzer.oracle(e));
}
BENCHMARK(BM_OracleDihedral)->Arg(6)->Arg(10);

void BM_SpectralDihedral(benchmark::State& state) {
  const FiniteAnalyzer analyzer(dihedral_space(static_cast<std::size_t>(state.range(0))));
  const std::vector<std::size_t> e{0, 1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(analyzer.spectral(e));
}
BENCHMARK(BM_SpectralDihedral)->Arg(6)->Arg(10);

void BM_SweepCyclic(benchmark::State& state) {
  const FiniteAnalyzer analyzer(cyclic_space(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(analyzer));
}
BENCHMARK(BM_SweepCyclic)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
