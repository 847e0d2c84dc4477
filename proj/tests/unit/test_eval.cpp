#include <doctest.h>

#include <cmath>

#include "smartvector/eval.hpp"
#include "smartvector/rng.hpp"

using namespace smartvector;

namespace {

const Timestamp kNow = make_timestamp(2026, 4, 1);

Prediction pred(QueryKind kind, double conf, bool correct,
                VectorStatus status = VectorStatus::Active) {
    Prediction p;
    p.kind = kind;
    p.confidence_signal = conf;
    p.correct = correct;
    p.status = status;
    return p;
}

// Single-pass reference ECE, written independently of the implementation.
double oracle_ece(const std::vector<Prediction>& preds) {
    struct Bin {
        double conf = 0;
        int n = 0;
        int right = 0;
    } bins[10];
    for (const auto& p : preds) {
        double c = std::min(1.0, std::max(0.0, p.confidence_signal));
        int b = c >= 1.0 ? 9 : static_cast<int>(std::floor(c * 10.0));
        bins[b].conf += c;
        bins[b].n += 1;
        bins[b].right += p.correct ? 1 : 0;
    }
    double total = 0;
    for (const auto& b : bins) {
        if (!b.n) continue;
        total += (double(b.n) / double(preds.size())) *
                 std::fabs(b.conf / b.n - double(b.right) / b.n);
    }
    return total;
}

}  // namespace

TEST_CASE("method specs carry the protocol weights") {
    CHECK(method_m1().weights.similarity == doctest::Approx(1.0));
    CHECK(method_m2().weights.temporal == doctest::Approx(0.4));
    CHECK(method_m3().weights.confidence == doctest::Approx(0.4));
    const auto m4 = method_m4().weights;
    CHECK(m4.similarity == doctest::Approx(0.35));
    CHECK(m4.temporal == doctest::Approx(0.25));
    CHECK(m4.confidence == doctest::Approx(0.25));
    CHECK(m4.relational == doctest::Approx(0.15));
    CHECK(method_m1().similarity_as_confidence);
    CHECK(!method_m4().similarity_as_confidence);
}

TEST_CASE("ablation variants renormalize to unit sum") {
    const auto rows = ablation_variants();
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) CHECK(r.weights.sum() == doctest::Approx(1.0).epsilon(1e-9));
    // minus-relational on a zero-edge corpus equals full M4 scoring-wise:
    // the relational signal contributes nothing either way.
    CHECK(rows[4].weights.relational == doctest::Approx(0.0));
}

TEST_CASE("ece trivial cases") {
    CHECK(expected_calibration_error({}) == doctest::Approx(0.0));
    std::vector<Prediction> perfect;
    for (int i = 0; i < 10; ++i) perfect.push_back(pred(QueryKind::Current, 1.0, true));
    CHECK(expected_calibration_error(perfect) == doctest::Approx(0.0));
}

TEST_CASE("ece hand-computed two-prediction case") {
    const std::vector<Prediction> preds = {pred(QueryKind::Current, 0.9, false),
                                           pred(QueryKind::Current, 0.1, true)};
    CHECK(expected_calibration_error(preds) == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("ece equals the brute-force oracle on random inputs") {
    Rng rng(5150);
    std::vector<Prediction> preds;
    for (int i = 0; i < 100; ++i) {
        const double conf = static_cast<double>(rng.int_in(0, 10000)) / 10000.0;
        preds.push_back(pred(QueryKind::Current, conf, rng.int_in(0, 1) == 1));
    }
    CHECK(expected_calibration_error(preds) ==
          doctest::Approx(oracle_ece(preds)).epsilon(1e-12));
}

TEST_CASE("stale rate counts deprecated top-1s over current queries only") {
    std::vector<Prediction> preds;
    CHECK(stale_rate(preds) == doctest::Approx(0.0));
    for (int i = 0; i < 59; ++i) preds.push_back(pred(QueryKind::Current, 0.5, true));
    preds.push_back(pred(QueryKind::Current, 0.5, false, VectorStatus::Deprecated));
    // Deprecated top-1s on conflict queries do not count.
    preds.push_back(pred(QueryKind::Conflict, 0.5, false, VectorStatus::Deprecated));
    CHECK(stale_rate(preds) == doctest::Approx(1.0 / 60.0).epsilon(1e-12));
}

TEST_CASE("run_method on a single-vector store scores the gold answer") {
    VectorStore store;
    store.ingest_document("doc", 1, "the only fact in town", SourceAuthority::Wiki, kNow);
    store.transition("doc:v1:c0", VectorStatus::Active, kNow);
    Query q;
    q.text = "the only fact in town";
    q.kind = QueryKind::Current;
    q.reference_time = kNow;
    q.gold_topic = "doc";
    q.gold_version = 1;
    const auto report = run_method(store, {q}, method_m4(), {});
    CHECK(report.overall == doctest::Approx(1.0));
    CHECK(report.total == 1);
    // The snapshot itself is untouched: evaluation runs on a copy.
    CHECK(store.get("doc:v1:c0").access_count == 0);
}

TEST_CASE("run_method is deterministic across repeat runs") {
    Pipeline p = prepare_pipeline({}, {});
    const auto a = run_method(p.snapshot, p.queries, method_m4(), {});
    const auto b = run_method(p.snapshot, p.queries, method_m4(), {});
    CHECK(a.overall == doctest::Approx(b.overall));
    CHECK(a.stale_rate == doctest::Approx(b.stale_rate));
    CHECK(a.ece == doctest::Approx(b.ece));
    REQUIRE(a.predictions.size() == b.predictions.size());
    for (std::size_t i = 0; i < a.predictions.size(); ++i)
        CHECK(a.predictions[i].vector_id == b.predictions[i].vector_id);

    // Overall accuracy is exactly the kind-weighted mean.
    const double weighted = (a.accuracy_current * 60 + a.accuracy_time_point * 60 +
                             a.accuracy_conflict * 18) /
                            138.0;
    CHECK(a.overall == doctest::Approx(weighted).epsilon(1e-12));
}

TEST_CASE("grid search enumerates the full simplex and breaks ties towards w_sim") {
    // Single-vector store: every weighting retrieves the gold answer, so
    // all 286 tuples tie and the tie-break must pick pure similarity.
    VectorStore store;
    store.ingest_document("doc", 1, "the only fact in town", SourceAuthority::Wiki, kNow);
    store.transition("doc:v1:c0", VectorStatus::Active, kNow);
    std::vector<Query> queries;
    for (int i = 0; i < 4; ++i) {
        Query q;
        q.text = "the only fact in town";
        q.kind = static_cast<QueryKind>(i % 3);
        q.reference_time = kNow;
        q.gold_topic = "doc";
        q.gold_version = 1;
        queries.push_back(q);
    }
    const auto grid = grid_search(store, queries, 7, {});
    CHECK(grid.tuples_evaluated == 286);
    CHECK(grid.best_weights.similarity == doctest::Approx(1.0));
    CHECK(grid.best_weights.temporal == doctest::Approx(0.0));
    CHECK(grid.dev_accuracy == doctest::Approx(1.0));
}

TEST_CASE("update cost experiment: plain charges the lineage, smart charges one") {
    BenchConfig config;
    EvalParams params;
    Pipeline p = prepare_pipeline(config, params);
    const auto cost = update_cost_experiment(p.snapshot, p.truth, config, params);
    CHECK(cost.topics == 60);
    CHECK(cost.mean_smart == doctest::Approx(1.0));
    // 4 versions everywhere plus a rumor on 18 of 60 topics.
    CHECK(cost.mean_plain == doctest::Approx(4.0 + 18.0 / 60.0).epsilon(1e-12));
    CHECK(cost.reduction > 0.70);
    // 11 dependency edges over 60 edits.
    CHECK(cost.mean_ripples == doctest::Approx(11.0 / 60.0).epsilon(1e-12));
}

TEST_CASE("noise sweep at rate zero has no conflict queries") {
    BenchConfig config;
    config.rumor_rate = 0.0;
    Pipeline p = prepare_pipeline(config, {});
    CHECK(p.queries.size() == 120);
    CHECK(p.consolidation.conflict_pairs.empty());
}

TEST_CASE("minus-relational equals full M4 on a corpus with zero edges") {
    BenchConfig config;
    config.dependency_stride = 1000;  // no dependency edges at all
    Pipeline p = prepare_pipeline(config, {});
    const auto full = run_method(p.snapshot, p.queries, method_m4(), {});
    const auto minus_rel = run_method(p.snapshot, p.queries, ablation_variants()[4], {});
    CHECK(full.overall == doctest::Approx(minus_rel.overall));
    CHECK(full.stale_rate == doctest::Approx(minus_rel.stale_rate));
    REQUIRE(full.predictions.size() == minus_rel.predictions.size());
    for (std::size_t i = 0; i < full.predictions.size(); ++i)
        CHECK(full.predictions[i].vector_id == minus_rel.predictions[i].vector_id);
}
