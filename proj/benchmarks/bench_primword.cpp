#include <benchmark/benchmark.h>

#include "primword/counting.hpp"
#include "primword/numtheory.hpp"
#include "primword/pairs.hpp"
#include "primword/word.hpp"

namespace {

using namespace primword;

// long word with a near-period, the worst case for the border pass
Word make_word(std::size_t len) {
    Word w;
    w.alphabet = 2;
    w.letters.resize(len);
    for (std::size_t i = 0; i < len; ++i) w.letters[i] = static_cast<int>((i * i + i / 7) % 2);
    return w;
}

void BM_IsPrimitive(benchmark::State& state) {
    Word w = make_word(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_primitive(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsPrimitive)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity();

void BM_PrimitiveRoot(benchmark::State& state) {
    Word w = power(make_word(static_cast<std::size_t>(state.range(0))), 4);
    for (auto _ : state) benchmark::DoNotOptimize(primitive_root(w).exponent);
}
BENCHMARK(BM_PrimitiveRoot)->Arg(1 << 10)->Arg(1 << 14);

void BM_CountPrimitive(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_primitive(2, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_CountPrimitive)->Arg(360)->Arg(1440)->Arg(5760);

void BM_Eps2DivisorSum(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(eps2_divisor_sum(2, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Eps2DivisorSum)->Arg(240)->Arg(840);

void BM_ConsistencyReport(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(consistency_report(2, 24, 0).all_agree);
}
BENCHMARK(BM_ConsistencyReport);

void BM_OracleEnumerate(benchmark::State& state) {
    int l = static_cast<int>(state.range(0));
    for (auto _ : state) {
        OracleResult r = oracle_enumerate_E(2, l, 1ull << 40);
        benchmark::DoNotOptimize(r.e1.size());
    }
}
BENCHMARK(BM_OracleEnumerate)->Arg(4)->Arg(5)->Arg(6);

void BM_ConstructE2(benchmark::State& state) {
    int l = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto ws = construct_e2(2, l, 1ull << 40);
        benchmark::DoNotOptimize(ws.size());
    }
}
BENCHMARK(BM_ConstructE2)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
