#include <benchmark/benchmark.h>

#include <numbers>

#include "fdde/ansatz.hpp"
#include "fdde/classifier.hpp"
#include "fdde/growth.hpp"

namespace {

using namespace fdde;

const Complex I{0.0, 1.0};
const double TWO_PI = 2.0 * std::numbers::pi;

FermatDDE thc_equation() {
  return FermatDDE(2, 2, 1, Complex{-1.0}, Complex{0.0}, ExpPoly::constant(Complex{0.5}),
                   ExpPoly::constant(Complex{0.5}), 2.0 * I, -2.0 * I, 1);
}

void BM_VerifyDelayFixture(benchmark::State& state) {
  const FermatDDE eq(5, 4, 0, Complex{1.0}, Complex{TWO_PI}, ExpPoly::constant(Complex{1.0}),
                     ExpPoly::constant(Complex{1.0}), 5.0 * I, 4.0 * I, 1);
  const ExpPoly f = ExpPoly::exponential(Poly::monomial(I, 1));
  for (auto _ : state) benchmark::DoNotOptimize(verify(eq, f));
}
BENCHMARK(BM_VerifyDelayFixture);

void BM_ClassifyQuadratic(benchmark::State& state) {
  const FermatDDE eq = thc_equation();
  for (auto _ : state) benchmark::DoNotOptimize(classify_k1_symmetric(eq));
}
BENCHMARK(BM_ClassifyQuadratic);

void BM_ClassifyQuartic(benchmark::State& state) {
  const FermatDDE eq(4, 4, 1, Complex{-1.0}, Complex{0.0}, ExpPoly::constant(Complex{0.5}),
                     ExpPoly::constant(Complex{0.5}), 2.0 * I, -2.0 * I, 1);
  for (auto _ : state) benchmark::DoNotOptimize(classify_k1_symmetric(eq));
}
BENCHMARK(BM_ClassifyQuartic);

void BM_Proximity(benchmark::State& state) {
  const ExpPoly f = ExpPoly::exponential(Poly::monomial(5.0 * I, 1)) +
                    ExpPoly::exponential(Poly::monomial(4.0 * I, 1));
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(proximity(f, r));
}
BENCHMARK(BM_Proximity)->Arg(10)->Arg(100);

void BM_ZerosInDisk(benchmark::State& state) {
  const ExpPoly f =
      ExpPoly::exponential(Poly::monomial(I, 1)) - ExpPoly::constant(Complex{1.0});
  for (auto _ : state) benchmark::DoNotOptimize(zeros_in_disk(f, 7.0));
}
BENCHMARK(BM_ZerosInDisk);

void BM_SearchQuadratic(benchmark::State& state) {
  const FermatDDE eq = thc_equation();
  AnsatzSpec spec;
  spec.frequencies = {I, -I};
  spec.starts = static_cast<int>(state.range(0));
  spec.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search(eq, spec));
}
BENCHMARK(BM_SearchQuadratic)->Arg(8)->Arg(64);

}  // namespace
