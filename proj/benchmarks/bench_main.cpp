#include <benchmark/benchmark.h>

#include <random>

#include "supergrass/koszul.hpp"
#include "supergrass/linalg.hpp"
#include "supergrass/split_fact.hpp"
#include "supergrass/supergrass.hpp"

using namespace sgr;

static void BM_BettiTable(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BettiTable t = betti_table({n, n, 1});
        benchmark::DoNotOptimize(t.entries.size());
    }
}
BENCHMARK(BM_BettiTable)->Arg(3)->Arg(5)->Arg(7);

static void BM_TorDims(benchmark::State& state) {
    int d_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TorDims tor = tor_dims({{2, 2, 1}, d_max, d_max});
        benchmark::DoNotOptimize(tor.dims.size());
    }
}
BENCHMARK(BM_TorDims)->Arg(3)->Arg(5);

static void BM_ExactRank(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    std::vector<SparseRow> mat;
    for (int i = 0; i < n; ++i) {
        SparseRow row;
        for (int j = 0; j < n; ++j)
            if (rng() % 3 == 0) row.emplace_back(j, Rat(num(rng), den(rng)));
        mat.push_back(std::move(row));
    }
    for (auto _ : state) benchmark::DoNotOptimize(exact_rank(mat));
}
BENCHMARK(BM_ExactRank)->Arg(30)->Arg(60);

static void BM_SplitRankVerify(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<Rat> f(n + 1, Rat(0));
    f[n] = 1;
    for (auto _ : state) {
        RankReport rep = verify_free_rank_split(f);
        benchmark::DoNotOptimize(rep.computed);
    }
}
BENCHMARK(BM_SplitRankVerify)->Arg(3)->Arg(4);

static void BM_SuperCohomology(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CohomologyReport rep = cohomology({n, n, n - 1, 1});
        benchmark::DoNotOptimize(rep.total_dim());
    }
}
BENCHMARK(BM_SuperCohomology)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
