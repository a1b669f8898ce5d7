#include <benchmark/benchmark.h>

#include "quiverlab/dsl.hpp"
#include "quiverlab/moment.hpp"
#include "quiverlab/necklace.hpp"
#include "quiverlab/sigma.hpp"

using namespace quiverlab;

namespace {

const char* kCalogeroMoser = "quiver { vertices v0 vinf  arrow x v0 v0  arrow v vinf v0 }";
const char* kTwoLoop = "quiver { vertices v  arrow a v v  arrow b v v }";

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

void bm_bracket(benchmark::State& state) {
  DoubleQuiver dq = double_quiver(parse_quiver(kCalogeroMoser));
  NecklaceWord w1 = parse_word(dq, "x x* v v* x x*");
  NecklaceWord w2 = parse_word(dq, "x* x v v* x* x");
  for (auto _ : state) benchmark::DoNotOptimize(bracket(dq, w1, w2));
}
BENCHMARK(bm_bracket);

void bm_roots(benchmark::State& state) {
  FormsContext ctx(parse_quiver(kCalogeroMoser));
  IntVec box = iv({static_cast<long>(state.range(0)), 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_roots(ctx, box));
}
BENCHMARK(bm_roots)->Arg(4)->Arg(8);

void bm_decide(benchmark::State& state) {
  SigmaQuery query = SigmaQuery::make(parse_quiver(kTwoLoop), {Rat(0)},
                                      iv({state.range(0)}));
  for (auto _ : state) benchmark::DoNotOptimize(decide(query));
}
BENCHMARK(bm_decide)->Arg(2)->Arg(3)->Arg(4);

void bm_newton(benchmark::State& state) {
  DoubleQuiver dq = double_quiver(parse_quiver(kCalogeroMoser));
  for (auto _ : state)
    benchmark::DoNotOptimize(newton_sample(dq, iv({2, 1}), {Rat(1), Rat(-2)}, 11, 20));
}
BENCHMARK(bm_newton);

}  // namespace

BENCHMARK_MAIN();
