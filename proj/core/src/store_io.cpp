#include "smartvector/store_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace smartvector {

namespace {

using Json = nlohmann::ordered_json;

Json timestamp_or_null(const std::optional<Timestamp>& t) {
    if (!t) return nullptr;
    return format_rfc3339(*t);
}

std::optional<Timestamp> timestamp_from(const Json& j, const std::string& field) {
    if (j.at(field).is_null()) return std::nullopt;
    auto parsed = parse_rfc3339(j.at(field).get<std::string>());
    if (!parsed) throw ValidationError("bad timestamp in field " + field);
    return parsed;
}

Json vector_to_json(const SmartVector& v) {
    Json j;
    j["vector_id"] = v.vector_id;
    j["doc_id"] = v.doc_id;
    j["doc_version"] = v.doc_version;
    j["chunk_index"] = v.chunk_index;
    j["content"] = v.content;
    j["content_hash"] = v.content_hash;
    j["author"] = v.author;
    j["created_at"] = format_rfc3339(v.created_at);
    j["updated_at"] = format_rfc3339(v.updated_at);
    j["temporal_validity_start"] = timestamp_or_null(v.temporal_validity_start);
    j["temporal_validity_end"] = timestamp_or_null(v.temporal_validity_end);
    j["base_confidence"] = v.base_confidence;
    j["access_count"] = v.access_count;
    j["positive_feedback"] = v.positive_feedback;
    j["negative_feedback"] = v.negative_feedback;
    j["last_validated"] = timestamp_or_null(v.last_validated);
    j["half_life_days"] = v.half_life_days;
    j["depends_on"] = v.depends_on;
    j["depended_by"] = v.depended_by;
    j["supersedes"] = v.supersedes ? Json(*v.supersedes) : Json(nullptr);
    j["superseded_by"] = v.superseded_by ? Json(*v.superseded_by) : Json(nullptr);
    j["contradictions"] = v.contradictions;
    j["status"] = to_string(v.status);
    j["source_offset_start"] = v.source_offset_start;
    j["source_offset_end"] = v.source_offset_end;
    return j;
}

SmartVector vector_from_json(const Json& j) {
    SmartVector v;
    v.vector_id = j.at("vector_id").get<std::string>();
    v.doc_id = j.at("doc_id").get<std::string>();
    v.doc_version = j.at("doc_version").get<int>();
    v.chunk_index = j.at("chunk_index").get<int>();
    v.content = j.at("content").get<std::string>();
    v.content_hash = j.at("content_hash").get<std::string>();
    v.author = j.at("author").get<std::string>();
    auto created = timestamp_from(j, "created_at");
    auto updated = timestamp_from(j, "updated_at");
    if (!created || !updated) throw ValidationError("missing timestamps for " + v.vector_id);
    v.created_at = *created;
    v.updated_at = *updated;
    v.temporal_validity_start = timestamp_from(j, "temporal_validity_start");
    v.temporal_validity_end = timestamp_from(j, "temporal_validity_end");
    v.base_confidence = j.at("base_confidence").get<double>();
    v.access_count = j.at("access_count").get<long>();
    v.positive_feedback = j.at("positive_feedback").get<long>();
    v.negative_feedback = j.at("negative_feedback").get<long>();
    v.last_validated = timestamp_from(j, "last_validated");
    v.half_life_days = j.at("half_life_days").get<double>();
    v.depends_on = j.at("depends_on").get<std::vector<std::string>>();
    v.depended_by = j.at("depended_by").get<std::vector<std::string>>();
    if (!j.at("supersedes").is_null()) v.supersedes = j.at("supersedes").get<std::string>();
    if (!j.at("superseded_by").is_null())
        v.superseded_by = j.at("superseded_by").get<std::string>();
    v.contradictions = j.at("contradictions").get<std::vector<std::string>>();
    auto status = status_from_string(j.at("status").get<std::string>());
    if (!status) throw ValidationError("bad status for " + v.vector_id);
    v.status = *status;
    v.source_offset_start = j.at("source_offset_start").get<long>();
    v.source_offset_end = j.at("source_offset_end").get<long>();
    return v;
}

}  // namespace

std::string store_to_json(const VectorStore& store) {
    Json j;
    j["vectors"] = Json::array();
    for (const auto& [id, v] : store.vectors()) {
        (void)id;
        j["vectors"].push_back(vector_to_json(v));
    }
    j["recent_changes"] = store.recent_changes();
    return j.dump(2) + "\n";
}

VectorStore store_from_json(const std::string& json_text) {
    Json j = Json::parse(json_text);
    VectorStore store;
    for (const auto& jv : j.at("vectors")) store.insert(vector_from_json(jv));
    for (const auto& id : j.at("recent_changes"))
        store.push_recent_change(id.get<std::string>());
    return store;
}

void save_store(const VectorStore& store, const std::string& path) {
    write_text_file(path, store_to_json(store));
}

VectorStore load_store(const std::string& path) {
    return store_from_json(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << content;
}

}  // namespace smartvector
