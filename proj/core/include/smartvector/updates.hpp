#pragma once
// Surgical document updates: diff the old and new text, deprecate only the
// chunks whose source offsets overlap a changed range, re-embed those, and
// carry every untouched chunk into the new version with shifted offsets
// and an unchanged content hash. Atomic under the store's single-writer
// contract: the version bump applies entirely or not at all.

#include <string>
#include <utility>
#include <vector>

#include "smartvector/diff.hpp"
#include "smartvector/store.hpp"

namespace smartvector {

struct UpdateResult {
    // (deprecated_id, replacement_id) for every re-embedded chunk; carried
    // chunks do not appear here and are not charged as re-embeddings.
    std::vector<std::pair<std::string, std::string>> replacements;
    int new_version = 0;  // 0 when the update was a no-op
};

// Throws NotFoundError for an unknown doc_id, ValidationError for empty
// new_text. Identical text is a no-op (no version bump).
UpdateResult ingest_update(VectorStore& store, const std::string& doc_id,
                           const std::string& new_text, Timestamp now);

// DEPRECATED vectors whose lineage has moved on by at least
// grace_generations versions transition to ARCHIVED. Returns the count.
long archive_superseded(VectorStore& store, Timestamp now, int grace_generations = 2);

}  // namespace smartvector
