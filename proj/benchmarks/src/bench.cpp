// Micro benchmarks for the hot paths: algebra products, idempotent
// construction (both routes), the symbolic product build, and matrix ranks
// in the tensor representation.

#include "rsf/fusion.hpp"
#include "rsf/hecke.hpp"
#include "rsf/linalg.hpp"
#include "rsf/partition.hpp"
#include "rsf/qalgebra.hpp"
#include "rsf/schurweyl.hpp"
#include "rsf/tableau.hpp"

#include <benchmark/benchmark.h>

using namespace rsf;

namespace {

const Params& bench_params() {
  static Params p(Rational(2), Rational(3));
  return p;
}

void bm_hecke_product(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  HeckeAlgebra alg(m, bench_params());
  // Two dense-ish elements: longest element times a generator spread.
  auto a = t_longest(alg, m);
  auto b = t_longest_inverse(alg, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(he_mul(a, b));
  }
}
BENCHMARK(bm_hecke_product)->Arg(3)->Arg(4)->Arg(5);

void bm_jm_idempotent(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  HeckeAlgebra alg(m, bench_params());
  Partition lambda = partitions_of(m)[1];  // (m-1, 1)
  StandardTableau t = standard_tableaux(lambda).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(jm_idempotent(alg, lambda, t));
  }
}
BENCHMARK(bm_jm_idempotent)->Arg(3)->Arg(4)->Arg(5);

void bm_psi_build(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  HeckeAlgebra alg(m, bench_params());
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi(alg));
  }
}
BENCHMARK(bm_psi_build)->Arg(3)->Arg(4);

void bm_fused_evaluation(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  HeckeAlgebra alg(m, bench_params());
  auto cached_psi = psi(alg);
  Partition lambda = partitions_of(m)[1];
  StandardTableau t = standard_tableaux(lambda).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fused_idempotent_given_psi(cached_psi, lambda, t));
  }
}
BENCHMARK(bm_fused_evaluation)->Arg(3)->Arg(4);

void bm_projector_rank(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  int n = 2;
  HeckeAlgebra alg(m, bench_params());
  Partition lambda = partitions_of(m)[1];
  StandardTableau t = standard_tableaux(lambda).front();
  auto e = jm_idempotent(alg, lambda, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_of(hecke_action(e, n)));
  }
}
BENCHMARK(bm_projector_rank)->Arg(3)->Arg(4)->Arg(5);

void bm_audit(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur_weyl_audit(n, m, bench_params()));
  }
}
BENCHMARK(bm_audit)->Args({2, 3})->Args({2, 4})->Args({3, 3});

}  // namespace

BENCHMARK_MAIN();
