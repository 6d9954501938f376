// Microbenchmarks for the costly paths: exact Wronskians, chain
// construction, root-count certificates, the discretized spectrum, and the
// orthogonality quadrature.

#include <benchmark/benchmark.h>

#include "isodbt/admissibility.hpp"
#include "isodbt/chain.hpp"
#include "isodbt/numeric.hpp"
#include "isodbt/shape_invariance.hpp"

namespace {

using namespace isodbt;

ChainSpec chain3() {
  return parse_chain("1+,2-,3+",
                     IsotonicParams(Rational(1), Rational(4)));
}

void BM_SeedWronskian3(benchmark::State& state) {
  IsotonicParams p(Rational(1), Rational(4));
  std::vector<GaugedFunction> fns = {seed_state(1, +1, p).fn,
                                     seed_state(2, -1, p).fn,
                                     seed_state(3, +1, p).fn};
  for (auto _ : state) benchmark::DoNotOptimize(wronskian(fns));
}
BENCHMARK(BM_SeedWronskian3);

void BM_ExtendedPotential(benchmark::State& state) {
  ChainSpec c = chain3();
  for (auto _ : state) benchmark::DoNotOptimize(extended_potential(c));
}
BENCHMARK(BM_ExtendedPotential);

void BM_EigenstateWronskian(benchmark::State& state) {
  Extension ext = extended_potential(chain3());
  for (auto _ : state)
    benchmark::DoNotOptimize(eigenstate_wronskian(ext, 4));
}
BENCHMARK(BM_EigenstateWronskian);

void BM_SturmCertificate(benchmark::State& state) {
  Extension ext = extended_potential(chain3());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sturm_count(ext.d, Rational(0), std::nullopt));
}
BENCHMARK(BM_SturmCertificate);

void BM_ShapeInvariance(benchmark::State& state) {
  ChainSpec c = chain3();
  for (auto _ : state) benchmark::DoNotOptimize(si_check(c));
}
BENCHMARK(BM_ShapeInvariance);

void BM_GridSpectrum(benchmark::State& state) {
  ChainSpec c = chain3();
  Extension ext = extended_potential(c);
  PotentialFn v = ext.v();
  GridSpec g = default_grid(c.params, 4,
                            static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grid_spectrum(v, g, 4));
}
BENCHMARK(BM_GridSpectrum)->Arg(8000)->Arg(30000);

void BM_OrthogonalityGram(benchmark::State& state) {
  Extension ext = extended_potential(chain3());
  for (auto _ : state)
    benchmark::DoNotOptimize(orthogonality_matrix(ext, 5, QuadSpec{}));
}
BENCHMARK(BM_OrthogonalityGram);

}  // namespace

BENCHMARK_MAIN();
