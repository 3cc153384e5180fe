// Solver throughput over random freely reduced words of growing length.

#include <random>

#include <benchmark/benchmark.h>

#include "combword/builders.hpp"
#include "combword/solver.hpp"

namespace {

using namespace combword;

Word random_reduced(int len, const Alphabet& a, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, a.size() - 1);
    Word w;
    while (w.size() < len) {
        Letter x = static_cast<Letter>(dist(rng));
        if (!w.empty() && a.inverse(w.back()) == x) continue;
        w.push_back(x);
    }
    return w;
}

const Combing& f2() {
    static Combing c = build_free_group_structure(2);
    return c;
}

void BM_SolveEnumerative(benchmark::State& state) {
    std::mt19937 rng(7u + static_cast<unsigned>(state.range(0)));
    Word w = random_reduced(static_cast<int>(state.range(0)), f2().alphabet, rng);
    w = w + invert_word(f2().alphabet, w);
    for (auto _ : state) {
        SpaceMeter meter;
        benchmark::DoNotOptimize(solve_enumerative(f2(), w, meter));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveEnumerative)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_SolveFast(benchmark::State& state) {
    std::mt19937 rng(7u + static_cast<unsigned>(state.range(0)));
    Word w = random_reduced(static_cast<int>(state.range(0)), f2().alphabet, rng);
    w = w + invert_word(f2().alphabet, w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_fast(f2(), w));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveFast)->RangeMultiplier(2)->Range(4, 64)->Complexity();

} // namespace

BENCHMARK_MAIN();
