// sv: command-line front end for the smartvector library. Wires corpus
// generation, consolidation, surgical updates, retrieval and the
// benchmark experiments into reproducible runs. Flag defaults mirror the
// reference parameterization; a --config file overrides flags.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smartvector/config.hpp"
#include "smartvector/context.hpp"
#include "smartvector/store_io.hpp"
#include "smartvector/updates.hpp"

namespace sv = smartvector;
using Json = nlohmann::ordered_json;

namespace {

std::string pct(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%5.1f%%", 100.0 * x);
    return buf;
}

std::string num(double x, int prec = 3) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, x);
    return buf;
}

sv::Timestamp parse_now_flag(const std::string& flag) {
    if (flag.empty()) {
        const auto now = std::chrono::system_clock::now();
        return {std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()};
    }
    auto t = sv::parse_rfc3339(flag);
    if (!t) throw sv::ValidationError("bad --now timestamp (want RFC 3339): " + flag);
    return *t;
}

sv::ScoreWeights parse_weights(const std::string& csv) {
    sv::ScoreWeights w;
    double v[4];
    if (std::sscanf(csv.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]) != 4)
        throw sv::ValidationError("bad --weights (want sim,time,conf,rel): " + csv);
    if (v[0] < 0 || v[1] < 0 || v[2] < 0 || v[3] < 0 || v[0] + v[1] + v[2] + v[3] <= 0)
        throw sv::ValidationError("weights must be non-negative with a positive sum");
    const double sum = v[0] + v[1] + v[2] + v[3];
    w.similarity = v[0] / sum;
    w.temporal = v[1] / sum;
    w.confidence = v[2] / sum;
    w.relational = v[3] / sum;
    return w;
}

Json weights_json(const sv::ScoreWeights& w) {
    Json j;
    j["sim"] = w.similarity;
    j["time"] = w.temporal;
    j["conf"] = w.confidence;
    j["rel"] = w.relational;
    return j;
}

Json method_json(const sv::MethodReport& r) {
    Json j;
    j["name"] = r.name;
    j["weights"] = weights_json(r.weights);
    j["overall"] = r.overall;
    j["current"] = r.accuracy_current;
    j["time_point"] = r.accuracy_time_point;
    j["conflict"] = r.accuracy_conflict;
    j["stale_rate"] = r.stale_rate;
    j["ece"] = r.ece;
    return j;
}

void print_method_table(const std::vector<sv::MethodReport>& rows) {
    std::printf("%-20s %8s %8s %8s %9s %7s %7s\n", "method", "overall", "current", "time-pt",
                "conflict", "stale", "ece");
    for (const auto& r : rows) {
        std::printf("%-20s %8s %8s %8s %9s %7s %7s\n", r.name.c_str(), pct(r.overall).c_str(),
                    pct(r.accuracy_current).c_str(), pct(r.accuracy_time_point).c_str(),
                    pct(r.accuracy_conflict).c_str(), pct(r.stale_rate).c_str(),
                    num(r.ece).c_str());
    }
}

int print_checks(const std::vector<sv::CheckResult>& checks) {
    int failures = 0;
    for (const auto& c : checks) {
        std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
        if (!c.pass) ++failures;
    }
    return failures;
}

void write_report(const std::string& path, const Json& j) {
    if (path.empty()) return;
    sv::write_text_file(path, j.dump(2) + "\n");
    std::printf("report written to %s\n", path.c_str());
}

void print_consolidation(const sv::ConsolidationReport& r) {
    std::printf("%-28s %ld\n", "vectors recalculated", r.recalculated);
    std::printf("%-28s %ld\n", "moved to DORMANT", r.moved_dormant);
    std::printf("%-28s %zu\n", "conflict pairs found", r.conflict_pairs.size());
    std::printf("%-28s %ld\n", "new conflict pairs", r.new_conflict_pairs);
    std::printf("%-28s %zu\n", "edges added", r.edges_added.size());
    std::printf("%-28s %ld\n", "ripples propagated", r.ripples_run);
    std::printf("%-28s %ld\n", "ripple visits", r.ripple_visited_total);
    std::printf("%-28s %ld\n", "promoted to ACTIVE", r.promoted);
}

Json consolidation_json(const sv::ConsolidationReport& r) {
    Json j;
    j["recalculated"] = r.recalculated;
    j["moved_dormant"] = r.moved_dormant;
    Json pairs = Json::array();
    for (std::size_t i = 0; i < r.conflict_pairs.size(); ++i) {
        Json p;
        p["a"] = r.conflict_pairs[i].first;
        p["b"] = r.conflict_pairs[i].second;
        p["winner"] = r.conflict_winners[i];
        pairs.push_back(std::move(p));
    }
    j["conflicts"] = std::move(pairs);
    j["new_conflict_pairs"] = r.new_conflict_pairs;
    Json edges = Json::array();
    for (const auto& [from, to] : r.edges_added) {
        Json e;
        e["from"] = from;
        e["to"] = to;
        edges.push_back(std::move(e));
    }
    j["edges_added"] = std::move(edges);
    j["ripples_run"] = r.ripples_run;
    j["ripple_visited_total"] = r.ripple_visited_total;
    j["promoted"] = r.promoted;
    return j;
}

int run_demo() {
    sv::VectorStore store;
    const sv::Timestamp base = sv::make_timestamp(2026, 4, 1);

    store.ingest_document("engineering_wiki", 1, std::string(
        "Section 1: The sky-color calibration uses a blue baseline for\n"
        "atmospheric modelling. All sensors are calibrated quarterly."),
        sv::SourceAuthority::Wiki, base.plus_days(-40), base.plus_days(-40), std::nullopt,
        "alice_v1");
    store.ingest_document("engineering_wiki", 2, std::string(
        "Section 1: The sky-color calibration uses a yellow baseline for\n"
        "atmospheric modelling. All sensors are calibrated quarterly."),
        sv::SourceAuthority::Wiki, base, base, std::nullopt, "alice_v2");
    store.ingest_document("atmospheric_model", 1,
                          "The atmospheric model consumes the sky-color calibration baseline.",
                          sv::SourceAuthority::TechDoc, base.plus_days(-30), base.plus_days(-30),
                          std::nullopt, "modelling_guild");
    store.ingest_document("sensor_calibration", 1,
                          "Sensor calibration drift budgets derive from the atmospheric model.",
                          sv::SourceAuthority::TechDoc, base.plus_days(-20), base.plus_days(-20),
                          std::nullopt, "sensor_desk");
    store.ingest_document("slack_engineering", 1,
                          "I heard the sky calibration is switching to yellow baseline next\n"
                          "quarter.",
                          sv::SourceAuthority::Chat, base.plus_days(-5), base.plus_days(-5),
                          std::nullopt, "intern_bob");

    const std::string sky = "engineering_wiki:v2:c0";
    const std::string model = "atmospheric_model:v1:c0";
    const std::string sensor = "sensor_calibration:v1:c0";
    const std::string rumor = "slack_engineering:v1:c0";
    store.add_edge(model, sky, sv::EdgeKind::DependsOn);
    store.add_edge(sensor, model, sv::EdgeKind::DependsOn);
    store.add_edge(rumor, sky, sv::EdgeKind::Contradicts);
    store.get_mutable(sky).positive_feedback = 4;
    store.get_mutable(sky).access_count = 5;
    store.clear_recent_changes();

    std::printf("dependency chain: %s <- %s <- %s\n\n", sky.c_str(), model.c_str(),
                sensor.c_str());
    std::printf("ripple propagation after the sky-color update:\n");
    const double before_model = store.get(model).base_confidence;
    const double before_sensor = store.get(sensor).base_confidence;
    sv::propagate(store.get(sky), store, {});
    std::printf("  %-28s -%.3f (depth 0)\n", model.c_str(),
                before_model - store.get(model).base_confidence);
    std::printf("  %-28s -%.3f (depth 1)\n", sensor.c_str(),
                before_sensor - store.get(sensor).base_confidence);

    std::printf("\nassembled retrieval context:\n\n");
    auto results = sv::retrieve(store, "sky color calibration baseline", base, 2);
    std::fputs(sv::assemble_context(results, store, base).c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"smartvector: versioned, confidence-decaying, relation-aware retrieval"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags (--config) may follow the subcommand

    sv::RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path,
                   "config file (key=value or JSON); values override flags");

    // gen
    auto* gen = app.add_subcommand("gen", "generate the synthetic versioned-policy corpus");
    std::uint64_t seed = 7;
    double rumor_rate = 0.30;
    std::string out_path = "corpus.json";
    std::string queries_path = "queries.json";
    gen->add_option("--seed", seed, "generator seed")->capture_default_str();
    gen->add_option("--rumor-rate", rumor_rate, "contradiction injection rate")
        ->capture_default_str();
    gen->add_option("--out", out_path, "store output path")->capture_default_str();
    gen->add_option("--queries", queries_path, "query list output path")->capture_default_str();

    // consolidate
    auto* consolidate = app.add_subcommand("consolidate", "run one consolidation cycle");
    std::string store_path;
    std::string now_flag;
    std::string report_path;
    bool as_json = false;
    consolidate->add_option("--store", store_path, "store file")->required();
    consolidate->add_option("--now", now_flag, "reference time, RFC 3339 (default: wall clock)");
    consolidate->add_option("--report", report_path, "write the cycle report as JSON");
    consolidate->add_flag("--json", as_json, "print the report as JSON instead of a table");

    // update
    auto* update = app.add_subcommand("update", "apply a surgical document update");
    std::string update_doc, update_file;
    update->add_option("doc_id", update_doc, "document id")->required();
    update->add_option("file", update_file, "file with the new document text")->required();
    update->add_option("--store", store_path, "store file")->required();
    update->add_option("--now", now_flag, "reference time, RFC 3339 (default: wall clock)");

    // query
    auto* query = app.add_subcommand("query", "retrieve and print the assembled context");
    std::string query_text;
    int top_k = 3;
    std::string weights_flag;
    query->add_option("--store", store_path, "store file")->required();
    query->add_option("--text", query_text, "query text")->required();
    query->add_option("--k", top_k, "results to return")->capture_default_str();
    query->add_option("--now", now_flag, "reference time, RFC 3339 (default: wall clock)");
    query->add_option("--weights", weights_flag,
                      "signal weights sim,time,conf,rel (default 0.35,0.25,0.25,0.15)");
    bool no_save = false;
    query->add_flag("--no-save", no_save, "do not persist the access-count reconsolidation");

    // feedback
    auto* feedback = app.add_subcommand("feedback", "record user feedback for a vector");
    std::string feedback_id;
    bool fb_positive = false, fb_negative = false;
    feedback->add_option("--store", store_path, "store file")->required();
    feedback->add_option("--id", feedback_id, "vector id")->required();
    feedback->add_flag("--positive", fb_positive, "record an acceptance");
    feedback->add_flag("--negative", fb_negative, "record a correction");
    feedback->add_option("--now", now_flag, "reference time, RFC 3339 (default: wall clock)");

    // benchmark experiments
    bool check = false;
    auto add_bench_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
        cmd->add_flag("--check", check, "verify acceptance bands; nonzero exit on violation");
        cmd->add_option("--report", report_path, "write a JSON report");
    };
    auto* eval_cmd = app.add_subcommand("eval", "run methods M1-M5 over the benchmark");
    add_bench_flags(eval_cmd);
    auto* ablate = app.add_subcommand("ablate", "leave-one-out signal ablation");
    add_bench_flags(ablate);
    auto* sweep = app.add_subcommand("sweep", "contradiction-rate robustness sweep");
    add_bench_flags(sweep);
    std::string rates_flag = "0,0.15,0.30,0.50,0.75";
    sweep->add_option("--rates", rates_flag, "comma-separated injection rates")
        ->capture_default_str();
    auto* tune = app.add_subcommand("tune", "grid-search the scoring weights on a dev split");
    add_bench_flags(tune);
    std::uint64_t split_seed = 7;
    tune->add_option("--split-seed", split_seed, "dev/test split seed")->capture_default_str();
    auto* cost = app.add_subcommand("cost", "update-cost experiment (re-embeddings per edit)");
    add_bench_flags(cost);

    auto* demo = app.add_subcommand("demo", "dependency-chain ripple walkthrough");
    (void)demo;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        // Flags first, then the config file on top: config overrides flags.
        cfg.bench.seed = seed;
        if (gen->parsed()) cfg.bench.rumor_rate = rumor_rate;
        if (!config_path.empty()) cfg.apply_file(config_path);

        if (gen->parsed()) {
            auto [store, truth] = sv::generate_corpus(cfg.bench);
            sv::save_store(store, out_path);
            const auto queries = sv::generate_queries(truth, cfg.bench);
            sv::write_text_file(queries_path, sv::queries_to_json(queries));
            std::printf("wrote %zu vectors to %s, %zu queries to %s\n", store.size(),
                        out_path.c_str(), queries.size(), queries_path.c_str());
            return 0;
        }

        if (consolidate->parsed()) {
            auto store = sv::load_store(store_path);
            const auto report =
                sv::run_consolidation(store, parse_now_flag(now_flag), cfg.eval.consolidation);
            sv::save_store(store, store_path);
            if (as_json)
                std::printf("%s\n", consolidation_json(report).dump(2).c_str());
            else
                print_consolidation(report);
            write_report(report_path, consolidation_json(report));
            return 0;
        }

        if (update->parsed()) {
            auto store = sv::load_store(store_path);
            const std::string new_text = sv::read_text_file(update_file);
            const auto result =
                sv::ingest_update(store, update_doc, new_text, parse_now_flag(now_flag));
            sv::save_store(store, store_path);
            if (result.replacements.empty()) {
                std::printf("no-op update: text unchanged\n");
            } else {
                std::printf("doc %s bumped to v%d\n", update_doc.c_str(), result.new_version);
                for (const auto& [old_id, repl_id] : result.replacements)
                    std::printf("  %s -> %s\n", old_id.c_str(), repl_id.c_str());
                std::printf("%zu replacement(s) queued for ripple propagation\n",
                            result.replacements.size());
            }
            return 0;
        }

        if (query->parsed()) {
            auto store = sv::load_store(store_path);
            const sv::ScoreWeights w =
                weights_flag.empty() ? cfg.weights : parse_weights(weights_flag);
            const sv::Timestamp t = parse_now_flag(now_flag);
            auto results = sv::retrieve(store, query_text, t, top_k, w, cfg.eval.retrieval);
            std::fputs(sv::assemble_context(results, store, t).c_str(), stdout);
            if (!no_save) sv::save_store(store, store_path);
            return 0;
        }

        if (feedback->parsed()) {
            if (fb_positive == fb_negative)
                throw sv::ValidationError("pass exactly one of --positive / --negative");
            auto store = sv::load_store(store_path);
            sv::record_feedback(store, feedback_id, fb_positive, parse_now_flag(now_flag));
            sv::save_store(store, store_path);
            const auto& v = store.get(feedback_id);
            std::printf("%s feedback now +%ld/-%ld\n", feedback_id.c_str(), v.positive_feedback,
                        v.negative_feedback);
            return 0;
        }

        if (eval_cmd->parsed()) {
            auto pipeline = sv::prepare_pipeline(cfg.bench, cfg.eval);
            std::vector<sv::MethodReport> rows;
            for (const auto& m :
                 {sv::method_m1(), sv::method_m2(), sv::method_m3(), sv::method_m4()})
                rows.push_back(sv::run_method(pipeline.snapshot, pipeline.queries, m, cfg.eval));
            const auto grid =
                sv::grid_search(pipeline.snapshot, pipeline.queries, split_seed, cfg.eval);
            print_method_table(rows);
            std::printf("%-20s %8s   (tuned weights %s/%s/%s/%s on held-out test split)\n",
                        "M5_smart_tuned", pct(grid.test_accuracy).c_str(),
                        num(grid.best_weights.similarity, 1).c_str(),
                        num(grid.best_weights.temporal, 1).c_str(),
                        num(grid.best_weights.confidence, 1).c_str(),
                        num(grid.best_weights.relational, 1).c_str());
            Json j;
            j["methods"] = Json::array();
            for (const auto& r : rows) j["methods"].push_back(method_json(r));
            Json tuned;
            tuned["name"] = "M5_smart_tuned";
            tuned["weights"] = weights_json(grid.best_weights);
            tuned["test_accuracy"] = grid.test_accuracy;
            j["tuned"] = std::move(tuned);
            write_report(report_path, j);
            if (check) {
                const auto checks = sv::check_headline(rows[0], rows[1], rows[3]);
                return print_checks(checks) == 0 ? 0 : 1;
            }
            return 0;
        }

        if (ablate->parsed()) {
            auto pipeline = sv::prepare_pipeline(cfg.bench, cfg.eval);
            std::vector<sv::MethodReport> rows;
            for (const auto& m : sv::ablation_variants())
                rows.push_back(sv::run_method(pipeline.snapshot, pipeline.queries, m, cfg.eval));
            print_method_table(rows);
            Json j;
            j["rows"] = Json::array();
            for (const auto& r : rows) j["rows"].push_back(method_json(r));
            write_report(report_path, j);
            if (check) return print_checks(sv::check_ablation(rows)) == 0 ? 0 : 1;
            return 0;
        }

        if (sweep->parsed()) {
            std::vector<double> rates;
            std::size_t pos = 0;
            while (pos < rates_flag.size()) {
                std::size_t comma = rates_flag.find(',', pos);
                if (comma == std::string::npos) comma = rates_flag.size();
                rates.push_back(std::stod(rates_flag.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            const auto rows = sv::noise_sweep(cfg.bench, rates, cfg.eval);
            std::printf("%6s %12s %12s %10s %10s\n", "rate", "M1 overall", "M4 overall",
                        "M1 stale", "M4 stale");
            for (const auto& r : rows)
                std::printf("%6.2f %12s %12s %10s %10s\n", r.rate, pct(r.m1_overall).c_str(),
                            pct(r.m4_overall).c_str(), pct(r.m1_stale).c_str(),
                            pct(r.m4_stale).c_str());
            Json j;
            j["rows"] = Json::array();
            for (const auto& r : rows) {
                Json row;
                row["rate"] = r.rate;
                row["m1_overall"] = r.m1_overall;
                row["m4_overall"] = r.m4_overall;
                row["m1_stale"] = r.m1_stale;
                row["m4_stale"] = r.m4_stale;
                j["rows"].push_back(std::move(row));
            }
            write_report(report_path, j);
            if (check) return print_checks(sv::check_sweep(rows)) == 0 ? 0 : 1;
            return 0;
        }

        if (tune->parsed()) {
            auto pipeline = sv::prepare_pipeline(cfg.bench, cfg.eval);
            const auto grid =
                sv::grid_search(pipeline.snapshot, pipeline.queries, split_seed, cfg.eval);
            std::printf("tuples evaluated: %ld\n", grid.tuples_evaluated);
            std::printf("best weights: sim=%s time=%s conf=%s rel=%s\n",
                        num(grid.best_weights.similarity, 1).c_str(),
                        num(grid.best_weights.temporal, 1).c_str(),
                        num(grid.best_weights.confidence, 1).c_str(),
                        num(grid.best_weights.relational, 1).c_str());
            std::printf("dev accuracy: %s\n", pct(grid.dev_accuracy).c_str());
            std::printf("test accuracy: %s (default weights: %s)\n",
                        pct(grid.test_accuracy).c_str(),
                        pct(grid.default_test_accuracy).c_str());
            Json j;
            j["best_weights"] = weights_json(grid.best_weights);
            j["dev_accuracy"] = grid.dev_accuracy;
            j["test_accuracy"] = grid.test_accuracy;
            j["default_test_accuracy"] = grid.default_test_accuracy;
            j["tuples_evaluated"] = grid.tuples_evaluated;
            write_report(report_path, j);
            if (check) return print_checks(sv::check_tuning(grid)) == 0 ? 0 : 1;
            return 0;
        }

        if (cost->parsed()) {
            auto pipeline = sv::prepare_pipeline(cfg.bench, cfg.eval);
            const auto report =
                sv::update_cost_experiment(pipeline.snapshot, pipeline.truth, cfg.bench, cfg.eval);
            std::printf("topics simulated:            %ld\n", report.topics);
            std::printf("plain re-embeddings / edit:  %s\n", num(report.mean_plain, 2).c_str());
            std::printf("smart re-embeddings / edit:  %s\n", num(report.mean_smart, 2).c_str());
            std::printf("ripple messages / edit:      %s\n", num(report.mean_ripples, 2).c_str());
            std::printf("re-embedding reduction:      %s\n", pct(report.reduction).c_str());
            Json j;
            j["topics"] = report.topics;
            j["mean_plain"] = report.mean_plain;
            j["mean_smart"] = report.mean_smart;
            j["mean_ripples"] = report.mean_ripples;
            j["reduction"] = report.reduction;
            write_report(report_path, j);
            if (check) return print_checks(sv::check_cost(report)) == 0 ? 0 : 1;
            return 0;
        }

        if (demo->parsed()) return run_demo();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
