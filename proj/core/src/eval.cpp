#include "smartvector/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "smartvector/rng.hpp"
#include "smartvector/updates.hpp"

namespace smartvector {

namespace {

double ratio(long num, long den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

}  // namespace

MethodSpec method_m1() { return {"M1_plain", {1.0, 0.0, 0.0, 0.0}, true}; }
MethodSpec method_m2() { return {"M2_temporal", {0.6, 0.4, 0.0, 0.0}, false}; }
MethodSpec method_m3() { return {"M3_confidence", {0.6, 0.0, 0.4, 0.0}, false}; }
MethodSpec method_m4() { return {"M4_smart_default", {0.35, 0.25, 0.25, 0.15}, false}; }

std::vector<MethodSpec> ablation_variants() {
    const MethodSpec full = method_m4();
    std::vector<MethodSpec> rows = {full};
    const char* names[4] = {"minus_similarity", "minus_temporal", "minus_confidence",
                            "minus_relational"};
    for (int i = 0; i < 4; ++i) rows.push_back({names[i], full.weights.without(i), false});
    return rows;
}

MethodReport run_method(const VectorStore& snapshot, const std::vector<Query>& queries,
                        const MethodSpec& method, const EvalParams& params) {
    MethodReport report;
    report.name = method.name;
    report.weights = method.weights;

    VectorStore store = snapshot;  // fresh copy per method
    for (const Query& q : queries) {
        const auto results = retrieve(store, q.text, q.reference_time, 1, method.weights,
                                      params.retrieval, default_pool_filter);
        Prediction p;
        p.kind = q.kind;
        if (!results.empty()) {
            const ScoredResult& top = results.front();
            const SmartVector& v = store.get(top.vector_id);
            p.vector_id = top.vector_id;
            p.doc_id = v.doc_id;
            p.doc_version = v.doc_version;
            p.status = top.status;
            p.sim = top.sim;
            p.confidence_signal = method.similarity_as_confidence ? top.sim : top.confidence;
            p.correct = v.doc_id == q.gold_topic && v.doc_version == q.gold_version;
        }
        const int k = static_cast<int>(q.kind);
        report.kind_total[k] += 1;
        report.total += 1;
        if (p.correct) {
            report.kind_correct[k] += 1;
            report.correct += 1;
        }
        report.predictions.push_back(std::move(p));
    }

    report.overall = ratio(report.correct, report.total);
    report.accuracy_current = ratio(report.kind_correct[0], report.kind_total[0]);
    report.accuracy_time_point = ratio(report.kind_correct[1], report.kind_total[1]);
    report.accuracy_conflict = ratio(report.kind_correct[2], report.kind_total[2]);
    report.stale_rate = stale_rate(report.predictions);
    report.ece = expected_calibration_error(report.predictions);
    return report;
}

double stale_rate(const std::vector<Prediction>& predictions) {
    long current = 0, stale = 0;
    for (const Prediction& p : predictions) {
        if (p.kind != QueryKind::Current) continue;
        current += 1;
        if (p.status == VectorStatus::Deprecated) stale += 1;
    }
    return ratio(stale, current);
}

double expected_calibration_error(const std::vector<Prediction>& predictions) {
    if (predictions.empty()) return 0.0;
    double conf_sum[10] = {};
    long count[10] = {};
    long correct[10] = {};
    for (const Prediction& p : predictions) {
        double c = p.confidence_signal;
        if (c < 0.0) c = 0.0;
        if (c > 1.0) c = 1.0;
        int bin = static_cast<int>(c * 10.0);
        if (bin > 9) bin = 9;  // 1.0 lands in the top bin
        conf_sum[bin] += c;
        count[bin] += 1;
        if (p.correct) correct[bin] += 1;
    }
    const double n = static_cast<double>(predictions.size());
    double ece = 0.0;
    for (int b = 0; b < 10; ++b) {
        if (count[b] == 0) continue;
        const double mean_conf = conf_sum[b] / static_cast<double>(count[b]);
        const double acc = static_cast<double>(correct[b]) / static_cast<double>(count[b]);
        ece += (static_cast<double>(count[b]) / n) * std::fabs(mean_conf - acc);
    }
    return ece;
}

CostReport update_cost_experiment(const VectorStore& snapshot, const GroundTruth& truth,
                                  const BenchConfig& config, const EvalParams& params) {
    CostReport report;
    long plain_total = 0, smart_total = 0, ripple_total = 0;

    for (const TopicInfo& topic : truth.topics) {
        VectorStore store = snapshot;  // isolate each simulated edit
        const int latest = config.versions_per_topic;
        const std::string old_text = store.reconstruct_text(topic.doc_id, latest);

        // One-word edit: bump the policy value.
        const int old_value = topic.versions.back().value;
        const std::string needle = std::to_string(old_value);
        const auto pos = old_text.find(needle);
        std::string new_text = old_text;
        new_text.replace(pos, needle.size(), std::to_string(old_value + 1));

        const UpdateResult update = ingest_update(store, topic.doc_id, new_text, config.now);
        smart_total += static_cast<long>(update.replacements.size());

        // Plain RAG re-embeds every chunk the lineage held before the edit
        // (all versions plus the rumor the indexer keeps alongside them).
        long lineage = 0;
        for (const auto& id : store.doc_chunk_ids(topic.doc_id))
            if (store.get(id).doc_version <= latest) lineage += 1;
        if (topic.has_rumor)
            lineage += static_cast<long>(store.doc_chunk_ids(topic.rumor_doc_id).size());
        plain_total += lineage;

        for (const auto& [old_id, repl_id] : update.replacements) {
            (void)old_id;
            const auto visited = propagate(store.get(repl_id), store, params.consolidation.ripple);
            ripple_total += static_cast<long>(visited.size());
        }
    }

    report.topics = static_cast<long>(truth.topics.size());
    const double n = static_cast<double>(report.topics);
    report.mean_plain = plain_total / n;
    report.mean_smart = smart_total / n;
    report.mean_ripples = ripple_total / n;
    report.reduction = report.mean_plain > 0.0 ? 1.0 - report.mean_smart / report.mean_plain : 0.0;
    return report;
}

Pipeline prepare_pipeline(const BenchConfig& config, const EvalParams& params) {
    auto [store, truth] = generate_corpus(config);
    Pipeline p;
    p.consolidation = run_consolidation(store, config.now, params.consolidation);
    p.snapshot = std::move(store);
    p.truth = std::move(truth);
    p.queries = generate_queries(p.truth, config);
    return p;
}

std::vector<SweepRow> noise_sweep(const BenchConfig& config, const std::vector<double>& rates,
                                  const EvalParams& params) {
    std::vector<SweepRow> rows;
    for (double rate : rates) {
        BenchConfig c = config;
        c.rumor_rate = rate;
        Pipeline p = prepare_pipeline(c, params);
        const MethodReport m1 = run_method(p.snapshot, p.queries, method_m1(), params);
        const MethodReport m4 = run_method(p.snapshot, p.queries, method_m4(), params);
        rows.push_back({rate, m1.overall, m4.overall, m1.stale_rate, m4.stale_rate});
    }
    return rows;
}

GridResult grid_search(const VectorStore& snapshot, const std::vector<Query>& queries,
                       std::uint64_t split_seed, const EvalParams& params) {
    // Stratified 50/50 split preserving the kind ratio.
    std::vector<std::size_t> dev_idx, test_idx;
    for (int kind = 0; kind < 3; ++kind) {
        std::vector<std::size_t> bucket;
        for (std::size_t i = 0; i < queries.size(); ++i)
            if (static_cast<int>(queries[i].kind) == kind) bucket.push_back(i);
        Rng rng(mix(split_seed, 0x517EEDULL, static_cast<std::uint64_t>(kind)));
        rng.shuffle(bucket);
        const std::size_t half = bucket.size() / 2;
        for (std::size_t i = 0; i < bucket.size(); ++i)
            (i < half ? dev_idx : test_idx).push_back(bucket[i]);
    }
    std::sort(dev_idx.begin(), dev_idx.end());
    std::sort(test_idx.begin(), test_idx.end());

    std::vector<Query> dev, test;
    for (auto i : dev_idx) dev.push_back(queries[i]);
    for (auto i : test_idx) test.push_back(queries[i]);

    const auto accuracy_with = [&](const ScoreWeights& w, const std::vector<Query>& qs) {
        MethodSpec spec{"grid", w, false};
        return run_method(snapshot, qs, spec, params).overall;
    };

    GridResult result;
    int best[4] = {-1, 0, 0, 0};
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; i + j <= 10; ++j) {
            for (int k = 0; i + j + k <= 10; ++k) {
                const int l = 10 - i - j - k;
                result.tuples_evaluated += 1;
                const ScoreWeights w{i / 10.0, j / 10.0, k / 10.0, l / 10.0};
                const double acc = accuracy_with(w, dev);
                bool better = false;
                if (acc > result.dev_accuracy + 1e-12) {
                    better = true;
                } else if (std::fabs(acc - result.dev_accuracy) <= 1e-12 && best[0] >= 0) {
                    if (i > best[0]) {
                        better = true;
                    } else if (i == best[0]) {
                        const int cur[4] = {i, j, k, l};
                        for (int x = 1; x < 4; ++x) {
                            if (cur[x] != best[x]) {
                                better = cur[x] < best[x];
                                break;
                            }
                        }
                    }
                } else if (best[0] < 0) {
                    better = true;
                }
                if (better) {
                    result.dev_accuracy = acc;
                    result.best_weights = w;
                    best[0] = i;
                    best[1] = j;
                    best[2] = k;
                    best[3] = l;
                }
            }
        }
    }
    result.test_accuracy = accuracy_with(result.best_weights, test);
    result.default_test_accuracy = accuracy_with(method_m4().weights, test);
    return result;
}

std::vector<CheckResult> check_headline(const MethodReport& m1, const MethodReport& m2,
                                        const MethodReport& m4) {
    std::vector<CheckResult> checks;
    checks.push_back({"4a overall gap >= 20 points",
                      m4.overall - m1.overall >= 0.20,
                      fmt("M4 %.3f vs M1 %.3f (gap %.3f)", m4.overall, m1.overall,
                          m4.overall - m1.overall)});
    checks.push_back({"4b M1 time-point <= 10%", m1.accuracy_time_point <= 0.10,
                      fmt("M1 time-point %.3f", m1.accuracy_time_point)});
    checks.push_back({"4b M2 time-point >= 55%", m2.accuracy_time_point >= 0.55,
                      fmt("M2 time-point %.3f", m2.accuracy_time_point)});
    checks.push_back({"4b M4 time-point >= 55%", m4.accuracy_time_point >= 0.55,
                      fmt("M4 time-point %.3f", m4.accuracy_time_point)});
    checks.push_back({"4c M1 stale rate >= 25%", m1.stale_rate >= 0.25,
                      fmt("M1 stale %.3f", m1.stale_rate)});
    checks.push_back({"4c M4 stale <= M1 stale - 10 points",
                      m4.stale_rate <= m1.stale_rate - 0.10,
                      fmt("M4 %.3f vs M1 %.3f", m4.stale_rate, m1.stale_rate)});
    checks.push_back({"4d ECE(M4) <= 0.6 * ECE(M1)", m4.ece <= 0.6 * m1.ece,
                      fmt("M4 %.3f vs M1 %.3f", m4.ece, m1.ece)});
    return checks;
}

std::vector<CheckResult> check_ablation(const std::vector<MethodReport>& rows) {
    std::vector<CheckResult> checks;
    const MethodReport* full = nullptr;
    const MethodReport* minus_sim = nullptr;
    const MethodReport* minus_temporal = nullptr;
    double lowest_other = 2.0;
    for (const auto& r : rows) {
        if (r.name == "M4_smart_default") full = &r;
        if (r.name == "minus_similarity") minus_sim = &r;
        if (r.name == "minus_temporal") minus_temporal = &r;
    }
    for (const auto& r : rows) {
        if (&r == full || &r == minus_sim) continue;
        lowest_other = std::min(lowest_other, r.overall);
    }
    if (full && minus_sim && minus_temporal) {
        checks.push_back({"4e minus-similarity is the weakest variant",
                          minus_sim->overall < lowest_other,
                          fmt("minus-sim %.3f vs next lowest %.3f", minus_sim->overall,
                              lowest_other)});
        checks.push_back({"4e minus-temporal costs >= 15 points",
                          full->overall - minus_temporal->overall >= 0.15,
                          fmt("full %.3f vs minus-temporal %.3f", full->overall,
                              minus_temporal->overall)});
    }
    return checks;
}

std::vector<CheckResult> check_cost(const CostReport& cost) {
    std::vector<CheckResult> checks;
    checks.push_back({"5 smart re-embeddings mean == 1.0", cost.mean_smart == 1.0,
                      fmt("smart mean %.4f", cost.mean_smart)});
    checks.push_back({"5 plain mean within [4.0, 4.6]",
                      cost.mean_plain >= 4.0 && cost.mean_plain <= 4.6,
                      fmt("plain mean %.4f", cost.mean_plain)});
    checks.push_back({"5 reduction >= 70%", cost.reduction >= 0.70,
                      fmt("reduction %.4f", cost.reduction)});
    return checks;
}

std::vector<CheckResult> check_sweep(const std::vector<SweepRow>& rows) {
    std::vector<CheckResult> checks;
    const SweepRow* lo = nullptr;
    const SweepRow* hi = nullptr;
    for (const auto& r : rows) {
        if (r.rate == 0.0) lo = &r;
        if (r.rate == 0.75) hi = &r;
    }
    if (lo && hi) {
        checks.push_back({"6 M1 stale at 0.75 exceeds rate-0 by >= 10 points",
                          hi->m1_stale >= lo->m1_stale + 0.10,
                          fmt("%.3f at 0.75 vs %.3f at 0", hi->m1_stale, lo->m1_stale)});
    }
    bool all = true;
    double worst = 1.0;
    for (const auto& r : rows) {
        const double gap = r.m4_overall - r.m1_overall;
        worst = std::min(worst, gap);
        if (gap < 0.15) all = false;
    }
    checks.push_back({"6 M4 beats M1 by >= 15 points at every rate", all,
                      fmt("smallest gap %.3f", worst)});
    return checks;
}

std::vector<CheckResult> check_tuning(const GridResult& grid) {
    std::vector<CheckResult> checks;
    checks.push_back({"7 grid enumerates exactly 286 tuples", grid.tuples_evaluated == 286,
                      fmt("%.0f tuples", static_cast<double>(grid.tuples_evaluated))});
    checks.push_back({"7 tuned test >= default test - 2 points",
                      grid.test_accuracy >= grid.default_test_accuracy - 0.02,
                      fmt("tuned %.3f vs default %.3f", grid.test_accuracy,
                          grid.default_test_accuracy)});
    return checks;
}

}  // namespace smartvector
