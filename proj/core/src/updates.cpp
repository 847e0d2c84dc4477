#include "smartvector/updates.hpp"

#include <algorithm>

#include "smartvector/chunking.hpp"
#include "smartvector/sha256.hpp"

namespace smartvector {

namespace {

long change_delta(const DiffChange& c) {
    return static_cast<long>(c.replacement.size()) - (c.end - c.start);
}

// Offset shift accumulated by changes lying entirely left of position p.
// A zero-width change sitting exactly at p belongs to the right side.
long delta_before(const std::vector<DiffChange>& changes, long p) {
    long d = 0;
    for (const auto& c : changes) {
        if (c.end < p || (c.end == p && c.start < p)) d += change_delta(c);
    }
    return d;
}

// Overlap in the half-open sense; zero-width changes (pure insertions)
// attach to the chunk containing their position, end-of-text insertions
// to the last chunk. Without the zero-width rule boundary insertions
// would belong to no chunk and the update could not conserve the text.
bool chunk_affected(const SmartVector& v, const std::vector<DiffChange>& changes, long text_len,
                    bool is_last_chunk) {
    for (const auto& c : changes) {
        if (c.start == c.end) {
            if (v.source_offset_start <= c.start && c.start < v.source_offset_end) return true;
            if (is_last_chunk && c.start == text_len) return true;
        } else if (v.source_offset_start < c.end && v.source_offset_end > c.start) {
            return true;
        }
    }
    return false;
}

struct NewChunk {
    long start = 0;  // offsets into the new text
    long end = 0;
    const SmartVector* carried_from = nullptr;  // null for re-embedded chunks
    std::vector<std::string> superseded_ids;    // old chunks this one replaces
};

}  // namespace

UpdateResult ingest_update(VectorStore& store, const std::string& doc_id,
                           const std::string& new_text, Timestamp now) {
    if (!store.has_doc(doc_id)) throw NotFoundError("unknown doc id: " + doc_id);
    if (new_text.empty()) throw ValidationError("empty update rejected for " + doc_id);

    const int old_version = store.latest_version(doc_id);
    const std::string old_text = store.reconstruct_text(doc_id, old_version);
    const auto changes = diff(old_text, new_text);

    UpdateResult result;
    if (changes.empty()) return result;  // no-op update, no version bump

    const auto old_chunks = store.version_chunks(doc_id, old_version);
    const long old_len = static_cast<long>(old_text.size());

    std::vector<bool> affected(old_chunks.size(), false);
    for (std::size_t i = 0; i < old_chunks.size(); ++i) {
        affected[i] = chunk_affected(*old_chunks[i], changes, old_len,
                                     i + 1 == old_chunks.size());
    }

    // Plan the new version before touching the store so the bump is atomic.
    std::vector<NewChunk> plan;
    std::size_t i = 0;
    while (i < old_chunks.size()) {
        if (!affected[i]) {
            const SmartVector* v = old_chunks[i];
            const long shift = delta_before(changes, v->source_offset_start);
            NewChunk nc;
            nc.start = v->source_offset_start + shift;
            nc.end = nc.start + (v->source_offset_end - v->source_offset_start);
            nc.carried_from = v;
            nc.superseded_ids = {v->vector_id};
            plan.push_back(std::move(nc));
            ++i;
            continue;
        }
        // Maximal run of affected chunks maps to one span of the new text,
        // which is re-chunked from scratch.
        std::size_t run_end = i;
        while (run_end < old_chunks.size() && affected[run_end]) ++run_end;
        const long old_s = old_chunks[i]->source_offset_start;
        const long old_e = old_chunks[run_end - 1]->source_offset_end;
        const long new_s = old_s + delta_before(changes, old_s);
        long new_e = old_e + delta_before(changes, old_e);
        if (run_end == old_chunks.size()) {
            // An end-of-text insertion attaches to the last chunk but sits
            // right of old_e, so delta_before misses it.
            for (const auto& c : changes)
                if (c.start == c.end && c.start == old_len) new_e += change_delta(c);
        }

        std::vector<std::string> superseded;
        for (std::size_t k = i; k < run_end; ++k) superseded.push_back(old_chunks[k]->vector_id);

        const std::string span = new_text.substr(new_s, new_e - new_s);
        const auto spans = chunk_text(span);
        for (std::size_t k = 0; k < spans.size(); ++k) {
            NewChunk nc;
            nc.start = new_s + spans[k].start;
            nc.end = new_s + spans[k].end;
            // Positional pairing; extra replacements link to the run's last
            // deprecated chunk, extra deprecated ids pile onto the last
            // replacement.
            if (k < superseded.size()) {
                nc.superseded_ids = {superseded[k]};
                if (k + 1 == spans.size())
                    for (std::size_t x = k + 1; x < superseded.size(); ++x)
                        nc.superseded_ids.push_back(superseded[x]);
            } else {
                nc.superseded_ids = {superseded.back()};
            }
            plan.push_back(std::move(nc));
        }
        i = run_end;
    }

    // The planned spans must tile the new text exactly.
    long cursor = 0;
    for (const auto& nc : plan) {
        if (nc.start != cursor) throw ValidationError("update planning lost text coverage");
        cursor = nc.end;
    }
    if (cursor != static_cast<long>(new_text.size()))
        throw ValidationError("update planning lost text coverage");

    const int new_version = old_version + 1;
    result.new_version = new_version;

    for (std::size_t k = 0; k < plan.size(); ++k) {
        const NewChunk& nc = plan[k];
        SmartVector v;
        v.vector_id = make_vector_id(doc_id, new_version, static_cast<int>(k));
        v.doc_id = doc_id;
        v.doc_version = new_version;
        v.chunk_index = static_cast<int>(k);
        v.content = new_text.substr(nc.start, nc.end - nc.start);
        v.content_hash = sha256_hex(v.content);
        v.source_offset_start = nc.start;
        v.source_offset_end = nc.end;

        if (nc.carried_from) {
            const SmartVector& old = *nc.carried_from;
            v.author = old.author;
            v.created_at = old.created_at;
            v.updated_at = now;
            v.temporal_validity_start = old.temporal_validity_start;
            v.temporal_validity_end = old.temporal_validity_end;
            v.base_confidence = old.base_confidence;
            v.access_count = old.access_count;
            v.positive_feedback = old.positive_feedback;
            v.negative_feedback = old.negative_feedback;
            v.last_validated = old.last_validated;
            v.half_life_days = old.half_life_days;
            v.status = old.status;
        } else {
            const SmartVector& old = store.get(nc.superseded_ids.front());
            v.author = old.author;
            v.created_at = now;
            v.updated_at = now;
            v.temporal_validity_start = now;
            v.base_confidence = old.base_confidence;
            v.half_life_days = old.half_life_days;
            v.status = VectorStatus::Unconsolidated;
        }
        store.insert(std::move(v));

        const std::string new_id = make_vector_id(doc_id, new_version, static_cast<int>(k));
        for (std::size_t x = 0; x < nc.superseded_ids.size(); ++x) {
            const std::string& old_id = nc.superseded_ids[x];
            store.transfer_edges(old_id, new_id);
            if (x == 0) {
                store.get_mutable(new_id).supersedes = old_id;
                store.get_mutable(old_id).superseded_by = new_id;
            }
        }
        if (!nc.carried_from) {
            for (const auto& old_id : nc.superseded_ids)
                result.replacements.emplace_back(old_id, new_id);
            store.push_recent_change(new_id);
        }
    }

    for (const SmartVector* old : store.version_chunks(doc_id, old_version)) {
        const std::string old_id = old->vector_id;
        SmartVector& ov = store.get_mutable(old_id);
        if (transition_allowed(ov.status, VectorStatus::Deprecated)) {
            ov.status = VectorStatus::Deprecated;
            ov.updated_at = now;
        }
    }

    store.invalidate_index();
    return result;
}

long archive_superseded(VectorStore& store, Timestamp now, int grace_generations) {
    std::vector<std::string> to_archive;
    for (const auto& [id, v] : store.vectors()) {
        if (v.status != VectorStatus::Deprecated) continue;
        const int latest = store.latest_version(v.doc_id);
        if (latest - v.doc_version >= grace_generations) to_archive.push_back(id);
    }
    for (const auto& id : to_archive) store.transition(id, VectorStatus::Archived, now);
    return static_cast<long>(to_archive.size());
}

}  // namespace smartvector
