#pragma once
// Deterministic synthetic versioned-policy benchmark. Every draw is a
// stateless hash of (seed, field, topic), so regenerating at a different
// rumor rate leaves the canonical topics bit-identical and re-running with
// the same seed reproduces the corpus byte-for-byte.

#include <string>
#include <utility>
#include <vector>

#include "smartvector/store.hpp"

namespace smartvector {

struct BenchConfig {
    std::uint64_t seed = 7;
    int n_topics = 60;
    int n_templates = 20;
    int versions_per_topic = 4;
    int window_days_min = 240;  // span from first version to `now`
    int window_days_max = 420;
    int interval_days_min = 40;  // later inter-version gaps
    int interval_days_max = 90;
    double rumor_rate = 0.30;
    int rumor_age_days_min = 1;
    int rumor_age_days_max = 10;
    SourceAuthority rumor_authority = SourceAuthority::Chat;
    int dependency_stride = 5;
    // Age of the latest canonical version. The paper's temporal results
    // presuppose recent latest versions; the first inter-version gap
    // absorbs the window slack.
    int latest_age_days_min = 7;
    int latest_age_days_max = 24;
    // Time-point reference dates fall in the first part of the gold
    // version's validity window (see notes in the eval module).
    int time_point_max_offset_days = 38;
    Timestamp now = make_timestamp(2026, 4, 1);
};

struct TopicVersion {
    int value = 0;
    Timestamp created_at;
};

struct TopicInfo {
    int index = 0;
    std::string doc_id;
    std::string query_phrase;
    std::vector<TopicVersion> versions;  // ascending by version
    bool has_rumor = false;
    int rumor_value = 0;
    std::string rumor_doc_id;
    std::string rumor_vector_id;
};

struct GroundTruth {
    std::vector<TopicInfo> topics;
    std::vector<std::pair<std::string, std::string>> dependency_edges;  // (from, to)
    std::vector<std::string> rumor_vector_ids;
};

enum class QueryKind { Current, TimePoint, Conflict };

const char* to_string(QueryKind k);

struct Query {
    std::string text;
    QueryKind kind = QueryKind::Current;
    Timestamp reference_time;
    std::string gold_topic;  // doc_id of the canonical lineage
    int gold_version = 0;
};

std::pair<VectorStore, GroundTruth> generate_corpus(const BenchConfig& config = {});
std::vector<Query> generate_queries(const GroundTruth& truth, const BenchConfig& config = {});

std::string queries_to_json(const std::vector<Query>& queries);
std::vector<Query> queries_from_json(const std::string& json_text);

}  // namespace smartvector
