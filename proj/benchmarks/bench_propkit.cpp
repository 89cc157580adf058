#include <benchmark/benchmark.h>

#include <string>

#include "propkit/cutfree.hpp"
#include "propkit/formula.hpp"
#include "propkit/hilbert.hpp"
#include "propkit/normalforms.hpp"
#include "propkit/semantics.hpp"
#include "propkit/sequent.hpp"

namespace {

using namespace propkit;

Formula var_i(int i) { return Formula::var("p" + std::to_string(i)); }

// (p1 | ~p1) & ... & (pn | ~pn): valid, CNF growth is linear.
Formula lem_chain(int n) {
  Formula f = Formula::disj(var_i(1), Formula::neg(var_i(1)));
  for (int i = 2; i <= n; ++i)
    f = Formula::conj(Formula::disj(var_i(i), Formula::neg(var_i(i))), f);
  return f;
}

std::string chain_text(int n) {
  std::string s = "(p1 | ~p1)";
  for (int i = 2; i <= n; ++i) s += " & (p" + std::to_string(i) + " | ~p" + std::to_string(i) + ")";
  return s;
}

void BM_parse(benchmark::State& state) {
  std::string text = chain_text(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parse(text));
}
BENCHMARK(BM_parse)->Arg(4)->Arg(16)->Arg(64);

void BM_models(benchmark::State& state) {
  Formula f = lem_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(models(Context{}, f).entailed());
}
BENCHMARK(BM_models)->Arg(4)->Arg(8)->Arg(12);

void BM_complete(benchmark::State& state) {
  Formula f = lem_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CompletenessResult r = complete(f);
    benchmark::DoNotOptimize(r.provable());
  }
}
BENCHMARK(BM_complete)->Arg(2)->Arg(4)->Arg(8);

void BM_check_nc(benchmark::State& state) {
  CompletenessResult r = complete(lem_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_nc(*r.proof));
}
BENCHMARK(BM_check_nc)->Arg(2)->Arg(4)->Arg(8);

void BM_nc_to_hc(benchmark::State& state) {
  CompletenessResult r = complete(lem_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nc_to_hc(*r.proof));
}
BENCHMARK(BM_nc_to_hc)->Arg(2)->Arg(4);

void BM_gcf_prove(benchmark::State& state) {
  Sequent s{{}, {lem_chain(static_cast<int>(state.range(0)))}};
  for (auto _ : state) benchmark::DoNotOptimize(gcf_prove(s).proved());
}
BENCHMARK(BM_gcf_prove)->Arg(2)->Arg(4)->Arg(6);

void BM_cut_elimination(benchmark::State& state) {
  CompletenessResult r = complete(lem_chain(static_cast<int>(state.range(0))));
  GcDerivation g = nc_to_g(*r.proof);
  for (auto _ : state) benchmark::DoNotOptimize(cut_elimination(g).tree.rule);
}
BENCHMARK(BM_cut_elimination)->Arg(2)->Arg(4);

}  // namespace
