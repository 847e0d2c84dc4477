#include "smartvector/store.hpp"

#include <algorithm>

#include "smartvector/sha256.hpp"
#include "smartvector/tfidf.hpp"

namespace smartvector {

VectorStore::VectorStore() = default;
VectorStore::~VectorStore() = default;
VectorStore::VectorStore(VectorStore&&) noexcept = default;
VectorStore& VectorStore::operator=(VectorStore&&) noexcept = default;

VectorStore::VectorStore(const VectorStore& other)
    : vectors_(other.vectors_),
      by_doc_(other.by_doc_),
      recent_changes_(other.recent_changes_),
      index_(),
      index_dirty_(true) {}

VectorStore& VectorStore::operator=(const VectorStore& other) {
    if (this != &other) {
        vectors_ = other.vectors_;
        by_doc_ = other.by_doc_;
        recent_changes_ = other.recent_changes_;
        index_.reset();
        index_dirty_ = true;
    }
    return *this;
}

bool VectorStore::contains(const std::string& id) const {
    return vectors_.find(id) != vectors_.end();
}

const SmartVector& VectorStore::get(const std::string& id) const {
    auto it = vectors_.find(id);
    if (it == vectors_.end()) throw NotFoundError("unknown vector id: " + id);
    return it->second;
}

SmartVector& VectorStore::get_mutable(const std::string& id) {
    auto it = vectors_.find(id);
    if (it == vectors_.end()) throw NotFoundError("unknown vector id: " + id);
    return it->second;
}

std::vector<std::string> VectorStore::doc_ids() const {
    std::vector<std::string> out;
    out.reserve(by_doc_.size());
    for (const auto& [doc, ids] : by_doc_) out.push_back(doc);
    return out;
}

const std::vector<std::string>& VectorStore::doc_chunk_ids(const std::string& doc_id) const {
    static const std::vector<std::string> empty;
    auto it = by_doc_.find(doc_id);
    return it == by_doc_.end() ? empty : it->second;
}

bool VectorStore::has_doc(const std::string& doc_id) const {
    return by_doc_.find(doc_id) != by_doc_.end();
}

int VectorStore::latest_version(const std::string& doc_id) const {
    int latest = 0;
    for (const auto& id : doc_chunk_ids(doc_id)) {
        latest = std::max(latest, get(id).doc_version);
    }
    return latest;
}

std::vector<const SmartVector*> VectorStore::version_chunks(const std::string& doc_id,
                                                            int version) const {
    std::vector<const SmartVector*> out;
    for (const auto& id : doc_chunk_ids(doc_id)) {
        const SmartVector& v = get(id);
        if (v.doc_version == version) out.push_back(&v);
    }
    std::sort(out.begin(), out.end(), [](const SmartVector* a, const SmartVector* b) {
        return a->chunk_index < b->chunk_index;
    });
    return out;
}

std::string VectorStore::reconstruct_text(const std::string& doc_id, int version) const {
    std::string text;
    for (const SmartVector* v : version_chunks(doc_id, version)) text += v->content;
    return text;
}

void VectorStore::push_recent_change(const std::string& id) {
    recent_changes_.push_back(id);
}

void VectorStore::register_in_doc(const SmartVector& v) {
    by_doc_[v.doc_id].push_back(v.vector_id);
}

void VectorStore::append_unique(std::vector<std::string>& list, const std::string& id) {
    if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
}

SmartVector& VectorStore::insert(SmartVector v) {
    if (v.vector_id.empty()) throw ValidationError("vector_id must not be empty");
    if (contains(v.vector_id)) throw ValidationError("duplicate vector id: " + v.vector_id);
    if (v.source_offset_start >= v.source_offset_end)
        throw ValidationError("source offsets must satisfy start < end: " + v.vector_id);
    v.base_confidence = clamp_confidence(v.base_confidence);
    auto [it, ok] = vectors_.emplace(v.vector_id, std::move(v));
    (void)ok;
    register_in_doc(it->second);
    index_dirty_ = true;
    return it->second;
}

std::vector<std::string> VectorStore::ingest_document(
    const std::string& doc_id, int doc_version, const std::string& text,
    SourceAuthority source, Timestamp created_at,
    std::optional<Timestamp> validity_start, std::optional<Timestamp> validity_end,
    const std::string& author) {
    if (text.empty()) throw ValidationError("cannot ingest empty text for " + doc_id);
    const int prev = latest_version(doc_id);
    if (doc_version <= prev) {
        throw VersionConflictError("doc " + doc_id + " version " + std::to_string(doc_version) +
                                   " not greater than existing version " + std::to_string(prev));
    }
    if (validity_start && validity_end && !(*validity_start <= *validity_end))
        throw ValidationError("validity_start must not exceed validity_end for " + doc_id);

    const auto spans = chunk_text(text);
    std::vector<std::string> new_ids;
    new_ids.reserve(spans.size());

    for (std::size_t i = 0; i < spans.size(); ++i) {
        SmartVector v;
        v.vector_id = make_vector_id(doc_id, doc_version, static_cast<int>(i));
        v.doc_id = doc_id;
        v.doc_version = doc_version;
        v.chunk_index = static_cast<int>(i);
        v.content = text.substr(spans[i].start, spans[i].end - spans[i].start);
        v.content_hash = sha256_hex(v.content);
        v.author = author;
        v.created_at = created_at;
        v.updated_at = created_at;
        v.temporal_validity_start = validity_start;
        v.temporal_validity_end = validity_end;
        v.base_confidence = authority_prior(source);
        v.status = VectorStatus::Unconsolidated;
        v.source_offset_start = spans[i].start;
        v.source_offset_end = spans[i].end;
        insert(std::move(v));
        new_ids.push_back(make_vector_id(doc_id, doc_version, static_cast<int>(i)));
    }

    // Supersede the previous latest version chunk-by-chunk; leftover old
    // chunks (when the new text has fewer) are deprecated without a link.
    if (prev > 0) {
        for (const SmartVector* old : version_chunks(doc_id, prev)) {
            const std::string old_id = old->vector_id;
            SmartVector& old_v = get_mutable(old_id);
            if (old_v.chunk_index < static_cast<int>(new_ids.size())) {
                const std::string& repl_id = new_ids[old_v.chunk_index];
                SmartVector& repl = get_mutable(repl_id);
                repl.supersedes = old_id;
                old_v.superseded_by = repl_id;
                transfer_edges(old_id, repl_id);
            }
            if (transition_allowed(old_v.status, VectorStatus::Deprecated)) {
                old_v.status = VectorStatus::Deprecated;
                old_v.updated_at = created_at;
            }
        }
    }

    for (const auto& id : new_ids) push_recent_change(id);
    index_dirty_ = true;
    return new_ids;
}

void VectorStore::transfer_edges(const std::string& old_id, const std::string& repl_id) {
    // Copy both directions, then rewrite the counterpart lists so edge
    // symmetry survives the transfer.
    const std::vector<std::string> dep_on = get(old_id).depends_on;
    const std::vector<std::string> dep_by = get(old_id).depended_by;
    SmartVector& repl = get_mutable(repl_id);
    for (const auto& t : dep_on) {
        if (t == repl_id) continue;
        append_unique(repl.depends_on, t);
        append_unique(get_mutable(t).depended_by, repl_id);
    }
    for (const auto& t : dep_by) {
        if (t == repl_id) continue;
        append_unique(repl.depended_by, t);
        append_unique(get_mutable(t).depends_on, repl_id);
    }
    index_dirty_ = true;
}

void VectorStore::add_edge(const std::string& from_id, const std::string& to_id, EdgeKind kind) {
    if (from_id == to_id) throw ValidationError("self-edge rejected: " + from_id);
    SmartVector& from = get_mutable(from_id);
    SmartVector& to = get_mutable(to_id);
    switch (kind) {
        case EdgeKind::DependsOn:
            append_unique(from.depends_on, to_id);
            append_unique(to.depended_by, from_id);
            break;
        case EdgeKind::Supersedes:
            from.supersedes = to_id;
            to.superseded_by = from_id;
            if (transition_allowed(to.status, VectorStatus::Deprecated))
                to.status = VectorStatus::Deprecated;
            break;
        case EdgeKind::Contradicts:
            append_unique(from.contradictions, to_id);
            append_unique(to.contradictions, from_id);
            break;
    }
}

void VectorStore::transition(const std::string& id, VectorStatus to, Timestamp now) {
    SmartVector& v = get_mutable(id);
    if (!transition_allowed(v.status, to)) {
        throw IllegalTransitionError(std::string("illegal transition ") + to_string(v.status) +
                                     " -> " + to_string(to) + " for " + id);
    }
    v.status = to;
    v.updated_at = now;
}

const TermIndex& VectorStore::index() {
    if (index_dirty_ || !index_) {
        if (!index_) index_ = std::make_unique<TermIndex>();
        index_->build(*this);
        index_dirty_ = false;
    }
    return *index_;
}

}  // namespace smartvector
