#pragma once
// Benchmark evaluation: methods M1-M5 over the synthetic corpus, plus the
// ablation, noise sweep, update-cost and weight-tuning experiments.
// Every run starts from a fresh copy of the consolidated snapshot so one
// method's access-count reconsolidation cannot leak into another's
// confidence signal.

#include <string>
#include <vector>

#include "smartvector/bench.hpp"
#include "smartvector/consolidation.hpp"
#include "smartvector/retrieval.hpp"

namespace smartvector {

struct MethodSpec {
    std::string name;
    ScoreWeights weights;
    // M1 reports cosine similarity as its confidence proxy for the
    // calibration metric; every other method reports live confidence.
    bool similarity_as_confidence = false;
};

MethodSpec method_m1();
MethodSpec method_m2();
MethodSpec method_m3();
MethodSpec method_m4();
std::vector<MethodSpec> ablation_variants();  // full M4 + four leave-one-out rows

struct Prediction {
    QueryKind kind = QueryKind::Current;
    std::string vector_id;
    std::string doc_id;
    int doc_version = 0;
    VectorStatus status = VectorStatus::Unconsolidated;
    double sim = 0.0;
    double confidence_signal = 0.0;
    bool correct = false;
};

struct MethodReport {
    std::string name;
    ScoreWeights weights;
    long total = 0;
    long correct = 0;
    long kind_total[3] = {0, 0, 0};    // indexed by QueryKind
    long kind_correct[3] = {0, 0, 0};
    double overall = 0.0;
    double accuracy_current = 0.0;
    double accuracy_time_point = 0.0;
    double accuracy_conflict = 0.0;
    double stale_rate = 0.0;
    double ece = 0.0;
    std::vector<Prediction> predictions;
};

struct EvalParams {
    RetrievalParams retrieval;
    ConsolidationParams consolidation;
};

// Retrieves top-1 for every query against a fresh copy of `snapshot` and
// aggregates correctness by kind. Correct means the top-1 vector carries
// the query's (gold_topic, gold_version) labels; rumors never match.
MethodReport run_method(const VectorStore& snapshot, const std::vector<Query>& queries,
                        const MethodSpec& method, const EvalParams& params = {});

// Fraction of current-query predictions whose top-1 is DEPRECATED.
double stale_rate(const std::vector<Prediction>& predictions);

// Expected calibration error, ten equal-width bins over the recorded
// confidence value, mass-weighted |mean confidence - accuracy|.
double expected_calibration_error(const std::vector<Prediction>& predictions);

struct CostReport {
    double mean_plain = 0.0;
    double mean_smart = 0.0;
    double mean_ripples = 0.0;
    double reduction = 0.0;  // 1 - smart/plain
    long topics = 0;
};

// Simulates a one-word edit to every topic's latest canonical version on
// its own copy of the snapshot. Plain RAG is charged every chunk the
// lineage holds (all versions plus the rumor, when present); the surgical
// path is charged only diff-overlapping chunks.
CostReport update_cost_experiment(const VectorStore& snapshot, const GroundTruth& truth,
                                  const BenchConfig& config, const EvalParams& params = {});

struct SweepRow {
    double rate = 0.0;
    double m1_overall = 0.0;
    double m4_overall = 0.0;
    double m1_stale = 0.0;
    double m4_stale = 0.0;
};

std::vector<SweepRow> noise_sweep(const BenchConfig& config, const std::vector<double>& rates,
                                  const EvalParams& params = {});

struct GridResult {
    ScoreWeights best_weights;
    double dev_accuracy = 0.0;
    double test_accuracy = 0.0;
    double default_test_accuracy = 0.0;  // M4 weights on the same test split
    long tuples_evaluated = 0;
};

// Exhaustive search over the 0.1-granularity simplex (286 tuples) on a
// stratified 50/50 dev split; ties prefer higher w_sim, then the
// lexicographically smaller tuple.
GridResult grid_search(const VectorStore& snapshot, const std::vector<Query>& queries,
                       std::uint64_t split_seed = 7, const EvalParams& params = {});

// Generate + consolidate once; the returned snapshot is what every method
// evaluation copies.
struct Pipeline {
    VectorStore snapshot;
    GroundTruth truth;
    std::vector<Query> queries;
    ConsolidationReport consolidation;
};
Pipeline prepare_pipeline(const BenchConfig& config, const EvalParams& params = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> check_headline(const MethodReport& m1, const MethodReport& m2,
                                        const MethodReport& m4);
std::vector<CheckResult> check_ablation(const std::vector<MethodReport>& rows);
std::vector<CheckResult> check_cost(const CostReport& cost);
std::vector<CheckResult> check_sweep(const std::vector<SweepRow>& rows);
std::vector<CheckResult> check_tuning(const GridResult& grid);

}  // namespace smartvector
