#include <benchmark/benchmark.h>

#include "rootharm/hyper.hpp"
#include "rootharm/jacobi.hpp"
#include "rootharm/satake.hpp"
#include "rootharm/shift.hpp"

using namespace rootharm;

namespace {

void BM_DunklMatrix(benchmark::State& state) {
  RootDatum rd = RootDatum::build(state.range(0) == 1 ? "A2" : "B2");
  Multiplicity k = Multiplicity::symbolic(rd);
  auto basis = truncation_basis(rd, 3);
  CoVector xi(rd.rank());
  xi[0] = Scalar(1);
  for (auto _ : state) {
    DunklFamily T(k);  // fresh cache every round
    benchmark::DoNotOptimize(T.matrix(xi, basis));
  }
}
BENCHMARK(BM_DunklMatrix)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_NonsymmetricJacobi(benchmark::State& state) {
  RootDatum rd = RootDatum::build("A2");
  Multiplicity k = Multiplicity::symbolic(rd);
  int h = static_cast<int>(state.range(0));
  for (auto _ : state) {
    JacobiSystem J(k);
    for (const auto& mu : truncation_basis(rd, h)) benchmark::DoNotOptimize(J.nonsymmetric(mu));
  }
}
BENCHMARK(BM_NonsymmetricJacobi)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ShiftSolve(benchmark::State& state) {
  RootDatum rd = RootDatum::build("BC1");
  Multiplicity k = Multiplicity::symbolic(rd);
  for (auto _ : state) benchmark::DoNotOptimize(nonsymmetric_shift(k, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ShiftSolve)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SatakeImage(benchmark::State& state) {
  RootDatum rd = RootDatum::build("B2");
  HeckeParam q = HeckeParam::symbolic(rd);
  Weight lambda;
  lambda.c[0] = static_cast<int>(state.range(0));
  lambda.c[1] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(satake_image(lambda, q));
}
BENCHMARK(BM_SatakeImage)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Hyp2f1(benchmark::State& state) {
  // Series, Pfaff and 1/z branches.
  double z = state.range(0) == 0 ? 0.4 : state.range(0) == 1 ? -2.0 : -300.0;
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(0.7, 1.9, 2.3, z));
}
BENCHMARK(BM_Hyp2f1)->DenseRange(0, 2);

void BM_Rank1F(benchmark::State& state) {
  Rank1Params p{Complex(1.3, 0.4), 0.5, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(rank1_F(p, 2.5));
}
BENCHMARK(BM_Rank1F);

}  // namespace

BENCHMARK_MAIN();
