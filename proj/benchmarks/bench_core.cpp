#include <benchmark/benchmark.h>

#include "courant/complex.hpp"
#include "courant/dirac.hpp"
#include "courant/gallery.hpp"
#include "courant/sampling.hpp"
#include "courant/spec.hpp"

using namespace courant;

namespace {

SpecModel model(const char* name, bool force = false) {
  return instantiate(parse_spec(find_gallery(name)->text), force);
}

void BM_PolynomialProduct(benchmark::State& state) {
  const auto degree = static_cast<int>(state.range(0));
  Sampler s(1);
  auto a = s.nonzero_polynomial(3, degree, Field::Rational);
  auto b = s.nonzero_polynomial(3, degree, Field::Rational);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialProduct)->Arg(2)->Arg(4)->Arg(6);

void BM_ExteriorDerivative(benchmark::State& state) {
  auto c = make_euclidean_chart(4, false);
  Sampler s(2);
  auto w = s.form(c, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(w));
}
BENCHMARK(BM_ExteriorDerivative)->Arg(2)->Arg(4);

void BM_Dorfman(benchmark::State& state) {
  auto e = model("twisted-r3").structures.at("E");
  Sampler s(3);
  auto a = s.section(e.rank(), e.chart(), 2);
  auto b = s.section(e.rank(), e.chart(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(e.dorfman(a, b));
}
BENCHMARK(BM_Dorfman);

void BM_CheckAxioms(benchmark::State& state) {
  auto e = model("twisted-r3").structures.at("E");
  SampleSpec spec;
  spec.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(e, spec));
}
BENCHMARK(BM_CheckAxioms)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CheckMatchedPair(benchmark::State& state) {
  auto mp = model("merker-r2").pairs.at("P");
  for (auto _ : state) benchmark::DoNotOptimize(check_matched_pair(mp));
}
BENCHMARK(BM_CheckMatchedPair)->Unit(benchmark::kMillisecond);

void BM_MatchedSum(benchmark::State& state) {
  auto mp = model("complex-c2-h21").pairs.at("P");
  for (auto _ : state) benchmark::DoNotOptimize(matched_sum(mp));
}
BENCHMARK(BM_MatchedSum)->Unit(benchmark::kMicrosecond);

void BM_CheckDirac(benchmark::State& state) {
  auto d = model("port-hamiltonian").dirac.at("D");
  for (auto _ : state) benchmark::DoNotOptimize(check_dirac(d));
}
BENCHMARK(BM_CheckDirac)->Unit(benchmark::kMillisecond);

void BM_ParsePrintSpec(benchmark::State& state) {
  const auto text = find_gallery("merker-r2")->text;
  for (auto _ : state) benchmark::DoNotOptimize(print_spec(parse_spec(text)));
}
BENCHMARK(BM_ParsePrintSpec)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
