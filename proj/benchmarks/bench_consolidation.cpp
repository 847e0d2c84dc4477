#include <benchmark/benchmark.h>

#include "smartvector/bench.hpp"
#include "smartvector/consolidation.hpp"
#include "smartvector/updates.hpp"

namespace {

using namespace smartvector;

void BM_GenerateCorpus(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_corpus({}));
    }
}
BENCHMARK(BM_GenerateCorpus);

void BM_ConsolidationCycle(benchmark::State& state) {
    auto [snapshot, truth] = generate_corpus({});
    (void)truth;
    for (auto _ : state) {
        state.PauseTiming();
        VectorStore store = snapshot;
        state.ResumeTiming();
        benchmark::DoNotOptimize(run_consolidation(store, BenchConfig{}.now, {}));
    }
}
BENCHMARK(BM_ConsolidationCycle);

void BM_SurgicalUpdate(benchmark::State& state) {
    BenchConfig config;
    auto [snapshot, truth] = generate_corpus(config);
    run_consolidation(snapshot, config.now, {});
    const auto& topic = truth.topics.front();
    const std::string old_text = snapshot.reconstruct_text(topic.doc_id, 4);
    std::string new_text = old_text;
    const std::string needle = std::to_string(topic.versions.back().value);
    new_text.replace(new_text.find(needle), needle.size(),
                     std::to_string(topic.versions.back().value + 1));
    for (auto _ : state) {
        state.PauseTiming();
        VectorStore store = snapshot;
        state.ResumeTiming();
        benchmark::DoNotOptimize(ingest_update(store, topic.doc_id, new_text, config.now));
    }
}
BENCHMARK(BM_SurgicalUpdate);

}  // namespace
