#include <benchmark/benchmark.h>

#include "superquant/hadic.hpp"
#include "superquant/lusztig_form.hpp"
#include "superquant/serre.hpp"

using namespace superquant;

namespace {

void BM_qbinomial(benchmark::State& state) {
  int a = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_binomial(a, a / 2));
}
BENCHMARK(BM_qbinomial)->Arg(8)->Arg(16)->Arg(32);

void BM_form_entry(benchmark::State& state) {
  CartanDatum d = builtin_sl(2, 2);
  Monomial x({2, 1, 0, 1});
  Monomial y({1, 0, 1, 2});
  for (auto _ : state) {
    // fresh form each round, otherwise the memo makes later entries free
    FreeAlgebra alg(d);
    LusztigForm form(alg, 4);
    benchmark::DoNotOptimize(form.form(x, y));
  }
}
BENCHMARK(BM_form_entry);

void BM_gram_block(benchmark::State& state) {
  CartanDatum d = builtin_sl(2, 2);
  Weight w({1, 2, 1});
  for (auto _ : state) {
    FreeAlgebra alg(d);
    LusztigForm form(alg, 4);
    benchmark::DoNotOptimize(form.gram(w));
  }
}
BENCHMARK(BM_gram_block);

void BM_kernel_verify(benchmark::State& state) {
  CartanDatum d = builtin_sl(2, 1);
  int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_kernel(d, cap));
}
BENCHMARK(BM_kernel_verify)->Arg(3)->Arg(4);

void BM_normal_form(benchmark::State& state) {
  DoubleData dd = make_double(seed_sl2_borel());
  HadicContext ctx(dd, 4);
  Word w{3, 2, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(ctx.normal_form(w));
}
BENCHMARK(BM_normal_form);

void BM_compute_J(benchmark::State& state) {
  DoubleData dd = make_double(seed_sl2_borel());
  HadicContext ctx(dd, 4);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.compute_J());
}
BENCHMARK(BM_compute_J);

}  // namespace

BENCHMARK_MAIN();
