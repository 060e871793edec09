#include "posttag/block_search.hpp"
#include "posttag/block_word.hpp"
#include "posttag/chain.hpp"
#include "posttag/constants.hpp"
#include "posttag/mod3.hpp"
#include "posttag/tag_system.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace posttag;

namespace {

BinaryWord random_word(std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BinaryWord w;
    for (std::size_t i = 0; i < length; ++i) {
        w.push_back(static_cast<unsigned>(rng() & 1U));
    }
    return w;
}

void BM_CoreGrowth(benchmark::State& state) {
    const BinaryWord target = growth_prefix() + growth_core() + growth_suffix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(growth_core(), TagRules::post(), kChainStepBound, target));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kCoreGrowthSteps));
}
BENCHMARK(BM_CoreGrowth);

void BM_StepsOnLongWord(benchmark::State& state) {
    const BinaryWord start = random_word(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        BinaryWord w = start;
        for (int i = 0; i < 10000 && w.size() >= 3; ++i) {
            advance(w);
        }
        benchmark::DoNotOptimize(w);
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_StepsOnLongWord)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_FullPassSimulated(benchmark::State& state) {
    const BinaryWord w = random_word(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_pass_simulated(w));
    }
}
BENCHMARK(BM_FullPassSimulated)->Arg(300)->Arg(3000)->Arg(30000);

void BM_FullPassAlgebraic(benchmark::State& state) {
    const BinaryWord w = random_word(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_pass_algebraic(w));
    }
}
BENCHMARK(BM_FullPassAlgebraic)->Arg(300)->Arg(3000)->Arg(30000);

void BM_VerifyChain(benchmark::State& state) {
    const Quadruplet seed = growth_seed();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_chain(seed));
    }
}
BENCHMARK(BM_VerifyChain);

void BM_ConvertingSet(benchmark::State& state) {
    std::mt19937_64 rng(3);
    BlockWord word;
    for (std::int64_t i = 0; i < state.range(0); ++i) {
        word.push_back((rng() & 1U) ? BlockSymbol::One : BlockSymbol::Zero);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(converting_set(word));
    }
}
BENCHMARK(BM_ConvertingSet)->Arg(8)->Arg(16)->Arg(24);

void BM_BlockSearch(benchmark::State& state) {
    SearchOptions opts;
    opts.max_rows = 3;
    opts.budget = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(search(opts));
    }
}
BENCHMARK(BM_BlockSearch)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
