// Microbenchmarks for the hot paths: normal-form products, translation
// basis elements, triangular expansion, inverse coefficient families, and
// completed convolution coefficients.

#include <benchmark/benchmark.h>

#include "hecke/verify.hpp"

namespace {

using namespace hecke;

const RootDatum& affine_datum() {
  static const RootDatum rd = [] {
    KacMoodyMatrix m = validate_matrix({{2, -2}, {-2, 2}});
    return RootDatum(m, 3, {{1, 0, 0}, {0, 1, 0}},
                     {{2, -2, 1}, {-2, 2, 0}}, {Rat(1), Rat(1), Rat(0)},
                     std::vector<Rat>{Rat(0), Rat(0), Rat(1)}, "affine_a1");
  }();
  return rd;
}

AlgebraContext& ctx() {
  static AlgebraContext c(affine_datum());
  return c;
}

BLElt sample_elt(int terms) {
  DetRng rng(7);
  auto pool = dominant_pool(ctx(), 2);
  auto ball = ctx().weyl.ball(3);
  return random_bl_elt(ctx(), rng, pool, ball, terms);
}

void BM_bl_mul(benchmark::State& state) {
  BLElt a = sample_elt(3);
  BLElt b = sample_elt(3);
  for (auto _ : state) benchmark::DoNotOptimize(ctx().bl.mul(a, b));
}
BENCHMARK(BM_bl_mul);

void BM_t_basis_elt(benchmark::State& state) {
  const Coweight lam{-2, 1, 2};
  for (auto _ : state) {
    // A fresh bundle per iteration: the cache would otherwise absorb the
    // work being measured.
    AlgebraContext fresh(affine_datum());
    benchmark::DoNotOptimize(fresh.bl.t_basis(lam));
  }
}
BENCHMARK(BM_t_basis_elt);

void BM_expand_in_T(benchmark::State& state) {
  BLElt a = sample_elt(3);
  for (auto _ : state) benchmark::DoNotOptimize(ctx().bl.expand_in_T(a));
}
BENCHMARK(BM_expand_in_T);

void BM_a_polys(benchmark::State& state) {
  const WeylElt w = ctx().weyl.from_word({0, 1, 0, 1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(ctx().hecke.a_polys_for(w));
}
BENCHMARK(BM_a_polys);

void BM_completed_coeff(benchmark::State& state) {
  const Coweight d{0, 0, 1};
  const Coweight nu{-1, -1, 2};
  for (auto _ : state) {
    CompletedElt z = ctx().comp.z_orbit_series(d, ctx().rd.lt_one());
    CompletedElt zz = ctx().comp.mul(z, z);
    benchmark::DoNotOptimize(zz.eval(nu));
  }
}
BENCHMARK(BM_completed_coeff);

}  // namespace

BENCHMARK_MAIN();
