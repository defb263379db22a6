#include <benchmark/benchmark.h>

#include <random>

#include "fdde/exp_poly.hpp"
#include "fdde/parser.hpp"

namespace {

using namespace fdde;

const Complex I{0.0, 1.0};

ExpPoly random_operand(std::mt19937_64& rng, int terms) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::uniform_int_distribution<int> freq(-3, 3);
  std::vector<std::pair<Poly, Poly>> raw;
  for (int t = 0; t < terms; ++t) {
    const Poly coeff{{Complex{dist(rng), dist(rng)}, Complex{dist(rng), dist(rng)}}};
    const Poly exponent = Poly::monomial(
        Complex{static_cast<double>(freq(rng)), static_cast<double>(freq(rng))}, 1);
    raw.emplace_back(coeff, exponent);
  }
  return ExpPoly::from_terms(std::move(raw));
}

void BM_Normalize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ExpPoly f = random_operand(rng, static_cast<int>(state.range(0)));
  std::vector<std::pair<Poly, Poly>> raw;
  for (const ExpTerm& t : f.terms()) raw.emplace_back(t.coeff, t.exponent);
  for (auto _ : state) {
    auto copy = raw;
    benchmark::DoNotOptimize(ExpPoly::from_terms(std::move(copy)));
  }
}
BENCHMARK(BM_Normalize)->Arg(4)->Arg(16);

void BM_Multiply(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ExpPoly f = random_operand(rng, static_cast<int>(state.range(0)));
  const ExpPoly g = random_operand(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_Multiply)->Arg(3)->Arg(8);

void BM_Pow4(benchmark::State& state) {
  const ExpPoly f = ExpPoly::from_terms({{Poly::constant(Complex{1.0}), Poly::monomial(I, 1)},
                                         {Poly::constant(Complex{1.0}), Poly::monomial(-I, 1)}});
  for (auto _ : state) benchmark::DoNotOptimize(f.pow(4));
}
BENCHMARK(BM_Pow4);

void BM_Derivative(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const ExpPoly f = random_operand(rng, 6);
  for (auto _ : state) benchmark::DoNotOptimize(f.derivative(2));
}
BENCHMARK(BM_Derivative);

void BM_ParsePrintRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const ExpPoly f = random_operand(rng, 4);
  const std::string text = to_expression(f);
  for (auto _ : state) benchmark::DoNotOptimize(parse_exp_poly(text));
}
BENCHMARK(BM_ParsePrintRoundTrip);

}  // namespace

BENCHMARK_MAIN();
