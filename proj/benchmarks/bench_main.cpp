#include <benchmark/benchmark.h>

#include "shifted/bijections.hpp"
#include "shifted/enumerate.hpp"
#include "shifted/hooks.hpp"
#include "shifted/kraskiewicz.hpp"
#include "shifted/serialization.hpp"
#include "shifted/trapezoid.hpp"
#include "shifted/words.hpp"

namespace {

using namespace shifted;

void BM_hook_count(benchmark::State& state) {
    StrictPartition lam({20, 17, 13, 9, 6, 4, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hook_length_formula_count(lam));
    }
}
BENCHMARK(BM_hook_count);

void BM_enumerate_syt(benchmark::State& state) {
    StrictPartition lam({5, 3, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_syt(lam));
    }
}
BENCHMARK(BM_enumerate_syt);

void BM_insert(benchmark::State& state) {
    Word w = parse_word("010121012342312", 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kraskiewicz_insert(w));
    }
}
BENCHMARK(BM_insert);

void BM_bijection_roundtrip(benchmark::State& state) {
    StrictPartition lam({6, 2, 1});
    TrapezoidContext ctx = make_context(lam, 3, 2);
    ShiftedTableau t(lam, {{1, 2, 3, 5, 6, 9}, {4, 7}, {8}});
    for (auto _ : state) {
        ShiftedTableau b = syt_to_bs(t, ctx);
        benchmark::DoNotOptimize(bs_to_syt(b, ctx));
    }
}
BENCHMARK(BM_bijection_roundtrip);

void BM_reduced_words(benchmark::State& state) {
    SignedPermutation w = w_dr(2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_reduced_words(w));
    }
}
BENCHMARK(BM_reduced_words);

}  // namespace

BENCHMARK_MAIN();
