#include <benchmark/benchmark.h>

#include "pompeiu/bessel.hpp"
#include "pompeiu/euclidean_pompeiu.hpp"
#include "pompeiu/fourier_laplace.hpp"

namespace {

using namespace pompeiu;

EuclideanSet unit_square() { return EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}); }

void BM_BesselComplex(benchmark::State& state) {
  const Complex z(static_cast<double>(state.range(0)), 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(1, z));
}
BENCHMARK(BM_BesselComplex)->Arg(3)->Arg(30);

void BM_TransformSquare(benchmark::State& state) {
  const auto set = unit_square();
  const ComplexVector z(2, {Complex(3.1, 0.2), Complex(-1.7, 0.1), 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(fourier_laplace(set, z));
}
BENCHMARK(BM_TransformSquare);

void BM_TransformCube(benchmark::State& state) {
  const auto set = EuclideanSet::polytope(
      3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  const ComplexVector z(3, {Complex(3.1, 0.2), Complex(-1.7, 0.1), Complex(0.4, 0)});
  for (auto _ : state) benchmark::DoNotOptimize(fourier_laplace(set, z));
}
BENCHMARK(BM_TransformCube);

void BM_QuadratureDisk(benchmark::State& state) {
  const auto set = EuclideanSet::ball(2, 1);
  const ComplexVector z(2, {Complex(5, 0.3), Complex(1, 0), 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(fourier_laplace_quadrature(set, z));
}
BENCHMARK(BM_QuadratureDisk)->Unit(benchmark::kMicrosecond);

void BM_DiskRootSearch(benchmark::State& state) {
  const auto set = EuclideanSet::ball(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_failure_lambdas(set, 0, 20));
}
BENCHMARK(BM_DiskRootSearch)->Unit(benchmark::kMicrosecond);

void BM_SquareOrbitScan(benchmark::State& state) {
  const auto set = unit_square();
  EuclidOptions opts;
  opts.rotations = 64;
  for (auto _ : state) benchmark::DoNotOptimize(euclid_decide(set, opts));
}
BENCHMARK(BM_SquareOrbitScan)->Unit(benchmark::kMillisecond);

}  // namespace
