#include <benchmark/benchmark.h>

#include "smartvector/bench.hpp"
#include "smartvector/consolidation.hpp"
#include "smartvector/retrieval.hpp"
#include "smartvector/tfidf.hpp"

namespace {

using namespace smartvector;

// Consolidated default corpus shared across retrieval benchmarks.
const VectorStore& corpus() {
    static const VectorStore store = [] {
        auto [s, truth] = generate_corpus({});
        (void)truth;
        run_consolidation(s, BenchConfig{}.now, {});
        return s;
    }();
    return store;
}

void BM_IndexBuild(benchmark::State& state) {
    for (auto _ : state) {
        VectorStore store = corpus();
        benchmark::DoNotOptimize(store.index().doc_count());
    }
}
BENCHMARK(BM_IndexBuild);

void BM_RetrieveTop1(benchmark::State& state) {
    VectorStore store = corpus();
    (void)store.index();
    const Timestamp now = BenchConfig{}.now;
    std::size_t i = 0;
    const auto queries = generate_queries(generate_corpus({}).second, {});
    for (auto _ : state) {
        const auto& q = queries[i++ % queries.size()];
        benchmark::DoNotOptimize(retrieve(store, q.text, q.reference_time, 1));
        (void)now;
    }
}
BENCHMARK(BM_RetrieveTop1);

void BM_QueryScores(benchmark::State& state) {
    VectorStore store = corpus();
    const TermIndex& index = store.index();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            index.query_scores("what is the current parental leave allowance"));
    }
}
BENCHMARK(BM_QueryScores);

}  // namespace

BENCHMARK_MAIN();
