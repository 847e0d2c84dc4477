#include <doctest.h>

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <vector>

#include "smartvector/context.hpp"
#include "smartvector/retrieval.hpp"
#include "smartvector/store_io.hpp"
#include "smartvector/tfidf.hpp"

using namespace smartvector;

namespace {

const Timestamp kNow = make_timestamp(2026, 4, 1);

VectorStore store_with_docs(const std::vector<std::string>& texts) {
    VectorStore store;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        store.ingest_document("doc" + std::to_string(i), 1, texts[i], SourceAuthority::Wiki,
                              kNow);
    }
    return store;
}

// Brute-force tf-idf oracle, written independently of the index: its own
// tokenizer, raw maps, no inverted index.
std::map<std::string, int> oracle_terms(const std::string& text) {
    std::vector<std::string> toks;
    std::string cur;
    for (char raw : text) {
        const unsigned char c = static_cast<unsigned char>(raw);
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            toks.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    std::map<std::string, int> out;
    for (const auto& t : toks) out[t] += 1;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) out[toks[i] + " " + toks[i + 1]] += 1;
    return out;
}

double oracle_cosine(const std::string& a, const std::string& b,
                     const std::vector<std::string>& corpus) {
    std::map<std::string, int> df;
    for (const auto& doc : corpus)
        for (const auto& [term, n] : oracle_terms(doc)) {
            (void)n;
            df[term] += 1;
        }
    const double N = static_cast<double>(corpus.size());
    const auto idf = [&](const std::string& term) {
        const auto it = df.find(term);
        const double d = it == df.end() ? 0.0 : it->second;
        return std::log((1.0 + N) / (1.0 + d)) + 1.0;
    };
    const auto weigh = [&](const std::string& text) {
        std::map<std::string, double> w;
        double norm = 0.0;
        for (const auto& [term, n] : oracle_terms(text)) {
            w[term] = n * idf(term);
            norm += w[term] * w[term];
        }
        norm = std::sqrt(norm);
        if (norm > 0)
            for (auto& [term, x] : w) x /= norm;
        return w;
    };
    const auto wa = weigh(a), wb = weigh(b);
    double dot = 0.0;
    for (const auto& [term, x] : wa) {
        auto it = wb.find(term);
        if (it != wb.end()) dot += x * it->second;
    }
    return dot;
}

}  // namespace

TEST_CASE("empty store yields an empty index and empty retrievals") {
    VectorStore store;
    CHECK(store.index().doc_count() == 0);
    CHECK(retrieve(store, "anything", kNow, 3).empty());
}

TEST_CASE("identical documents have cosine 1, disjoint ones 0") {
    auto store = store_with_docs({"the quick brown fox", "the quick brown fox",
                                  "entirely different words here"});
    const TermIndex& index = store.index();
    CHECK(index.cosine("doc0:v1:c0", "doc1:v1:c0") == doctest::Approx(1.0));
    CHECK(index.cosine("doc0:v1:c0", "doc2:v1:c0") == doctest::Approx(0.0));

    const auto scores = index.query_scores("the quick brown fox");
    CHECK(scores.at("doc0:v1:c0") == doctest::Approx(1.0));
    CHECK(scores.find("doc2:v1:c0") == scores.end());  // no term overlap
}

TEST_CASE("index matches the brute-force tf-idf oracle on a toy corpus") {
    const std::vector<std::string> corpus = {
        "release freeze window lasts ten days",
        "the freeze applies to deployment windows",
        "travel policy covers reimbursement for flights",
    };
    auto store = store_with_docs(corpus);
    const TermIndex& index = store.index();

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            const double got = index.cosine("doc" + std::to_string(i) + ":v1:c0",
                                            "doc" + std::to_string(j) + ":v1:c0");
            const double want = oracle_cosine(corpus[i], corpus[j], corpus);
            CHECK(got == doctest::Approx(want).epsilon(1e-9));
        }
    }
    // Query-side scoring agrees with the oracle too (query is not a corpus doc).
    const std::string q = "freeze window policy";
    const auto scores = index.query_scores(q);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto it = scores.find("doc" + std::to_string(i) + ":v1:c0");
        const double got = it == scores.end() ? 0.0 : it->second;
        CHECK(got == doctest::Approx(oracle_cosine(q, corpus[i], corpus)).epsilon(1e-9));
    }
}

TEST_CASE("relational bonus saturates at 0.3") {
    SmartVector v;
    CHECK(relational_bonus(v) == doctest::Approx(0.0));
    v.depends_on = {"a"};
    v.depended_by = {"b"};
    CHECK(relational_bonus(v) == doctest::Approx(0.1 * std::log(3.0)).epsilon(1e-12));
    v.depends_on.resize(60, "x");
    v.depended_by.resize(40, "y");
    CHECK(relational_bonus(v) == doctest::Approx(0.3));
}

TEST_CASE("final score is the weighted combination, recomputable to 1e-9") {
    SmartVector v;
    v.vector_id = "v";
    v.created_at = kNow;
    v.base_confidence = 1.0;
    v.positive_feedback = 40;  // saturate confidence at 1.0
    v.depends_on.resize(100, "x");
    v.source_offset_end = 1;
    const ScoreWeights w;
    const auto r = score_vector(v, 1.0, kNow, w, {});
    CHECK(r.final == doctest::Approx(0.35 + 0.25 + 0.25 + 0.15 * 0.3).epsilon(1e-9));

    const auto sim_only = score_vector(v, 1.0, kNow, {1.0, 0.0, 0.0, 0.0}, {});
    CHECK(sim_only.final == doctest::Approx(1.0));
}

TEST_CASE("rank order is invariant under positive weight rescaling") {
    auto store = store_with_docs({
        "gamma ray observation schedule for the array",
        "gamma ray maintenance checklist",
        "unrelated catering menu for friday",
    });
    const ScoreWeights unit{0.35, 0.25, 0.25, 0.15};
    const ScoreWeights scaled{1.05, 0.75, 0.75, 0.45};  // x3
    auto snapshot = store;
    const auto a = retrieve(snapshot, "gamma ray schedule", kNow, 3, unit);
    auto snapshot2 = store;
    const auto b = retrieve(snapshot2, "gamma ray schedule", kNow, 3, scaled);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].vector_id == b[i].vector_id);
}

TEST_CASE("retrieve returns descending order, reinforces exactly the returned ids") {
    auto store = store_with_docs({"solar panel output telemetry", "solar panel cleaning rota",
                                  "solar inverter manual", "wind turbine blade specs"});
    const auto results = retrieve(store, "solar panel telemetry", kNow, 2);
    REQUIRE(results.size() == 2);
    CHECK(results[0].final >= results[1].final);
    for (const auto& r : results) CHECK(store.get(r.vector_id).access_count == 1);
    CHECK(store.get("doc3:v1:c0").access_count == 0);

    // Deterministic on repeat (fresh copy).
    auto again = store_with_docs({"solar panel output telemetry", "solar panel cleaning rota",
                                  "solar inverter manual", "wind turbine blade specs"});
    const auto results2 = retrieve(again, "solar panel telemetry", kNow, 2);
    REQUIRE(results2.size() == 2);
    CHECK(results2[0].vector_id == results[0].vector_id);
    CHECK(results2[1].vector_id == results[1].vector_id);
}

TEST_CASE("single-vector store: overlap query returns it and bumps access") {
    auto store = store_with_docs({"lone document about backups"});
    const auto results = retrieve(store, "backups", kNow, 1);
    REQUIRE(results.size() == 1);
    CHECK(results[0].vector_id == "doc0:v1:c0");
    CHECK(store.get("doc0:v1:c0").access_count == 1);
}

TEST_CASE("newer version outranks older at current time when sims tie") {
    VectorStore store;
    const Timestamp old_time = kNow.plus_days(-120);
    store.ingest_document("doc", 1, "the quota is some days", SourceAuthority::Policy, old_time,
                          old_time, kNow.plus_days(-20));
    store.ingest_document("doc", 2, "the quota is some days", SourceAuthority::Policy,
                          kNow.plus_days(-20), kNow.plus_days(-20), std::nullopt);
    const auto results = retrieve(store, "the quota is some days", kNow, 2);
    REQUIRE(results.size() == 2);
    CHECK(results[0].vector_id == "doc:v2:c0");  // temporal + confidence break the tie
    CHECK(results[0].sim == doctest::Approx(results[1].sim).epsilon(1e-9));
}

TEST_CASE("archived vectors leave the pool; deprecated stay retrievable") {
    auto store = store_with_docs({"topic one text", "topic one text alternative"});
    store.transition("doc0:v1:c0", VectorStatus::Deprecated, kNow);
    auto results = retrieve(store, "topic one text", kNow, 5);
    CHECK(results.size() == 2);
    store.transition("doc0:v1:c0", VectorStatus::Archived, kNow);
    results = retrieve(store, "topic one text", kNow, 5);
    REQUIRE(results.size() == 1);
    CHECK(results[0].vector_id == "doc1:v1:c0");
}

TEST_CASE("a recovered dormant vector is re-promoted on retrieval") {
    auto store = store_with_docs({"dormant subject matter"});
    SmartVector& v = store.get_mutable("doc0:v1:c0");
    v.status = VectorStatus::Dormant;
    v.positive_feedback = 20;  // confidence well above the threshold again
    const auto results = retrieve(store, "dormant subject matter", kNow, 1);
    REQUIRE(results.size() == 1);
    CHECK(store.get("doc0:v1:c0").status == VectorStatus::Active);
}

TEST_CASE("record_feedback bumps the counters and refreshes updated_at") {
    auto store = store_with_docs({"text"});
    record_feedback(store, "doc0:v1:c0", true, kNow.plus_days(1));
    record_feedback(store, "doc0:v1:c0", false, kNow.plus_days(2));
    const SmartVector& v = store.get("doc0:v1:c0");
    CHECK(v.positive_feedback == 1);
    CHECK(v.negative_feedback == 1);
    CHECK(v.updated_at == kNow.plus_days(2));
    CHECK_THROWS_AS(record_feedback(store, "nope", true, kNow), NotFoundError);
}

TEST_CASE("context assembly: empty results produce the header only") {
    VectorStore store;
    const std::string text = assemble_context({}, store, kNow);
    CHECK(text.find("=== SMART VECTOR RETRIEVAL CONTEXT ===") == 0);
    CHECK(text.find("Document 1") == std::string::npos);
}

TEST_CASE("context assembly flags conflicts against higher-ranked results") {
    auto store = store_with_docs({"the sky calibration baseline is blue",
                                  "heard the sky calibration baseline is yellow"});
    store.add_edge("doc0:v1:c0", "doc1:v1:c0", EdgeKind::Contradicts);
    auto results = retrieve(store, "sky calibration baseline", kNow, 2);
    REQUIRE(results.size() == 2);
    const std::string text = assemble_context(results, store, kNow);
    CHECK(text.find("-- Document 1 --") != std::string::npos);
    CHECK(text.find("(CONFLICTS WITH DOC 1)") != std::string::npos);
}

TEST_CASE("context assembly matches the committed golden file") {
    VectorStore store;
    const Timestamp base = make_timestamp(2026, 4, 17);
    store.ingest_document("engineering_wiki", 1,
                          "Section 1: The sky-color calibration uses a blue baseline.",
                          SourceAuthority::Wiki, base.plus_days(-30), base.plus_days(-30),
                          std::nullopt, "alice_v1");
    store.ingest_document("engineering_wiki", 2,
                          "Section 1: The sky-color calibration uses a yellow baseline for\n"
                          "atmospheric modelling. All sensors are calibrated quarterly.",
                          SourceAuthority::Wiki, base, base, std::nullopt, "alice_v2");
    store.ingest_document("slack_engineering", 1,
                          "I heard the sky calibration is switching to yellow baseline next\n"
                          "quarter.",
                          SourceAuthority::Chat, base.plus_days(-5), base.plus_days(-5),
                          std::nullopt, "intern_bob");
    store.add_edge("engineering_wiki:v2:c0", "slack_engineering:v1:c0", EdgeKind::Contradicts);
    store.transition("engineering_wiki:v2:c0", VectorStatus::Active, base);
    store.transition("slack_engineering:v1:c0", VectorStatus::Active, base);
    SmartVector& wiki = store.get_mutable("engineering_wiki:v2:c0");
    wiki.positive_feedback = 4;
    wiki.access_count = 5;

    auto results = retrieve(store, "sky calibration yellow baseline", base, 2);
    const std::string text = assemble_context(results, store, base);

    const std::string golden_path = std::string(SMARTVECTOR_TEST_DATA_DIR) + "/context_golden.txt";
    std::ifstream in(golden_path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file: ", golden_path);
    std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == golden);
}
