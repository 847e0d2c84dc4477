#pragma once
// VectorStore: id-indexed SmartVectors, per-document chunk lists, the
// pending-change queue consumed by ripple propagation, and the tf-idf
// index used for similarity scoring.
//
// Concurrency contract: single writer, multiple readers. All mutating
// calls must be serialized by the caller; reads against a store that is
// not being mutated are safe from any thread.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smartvector/chunking.hpp"
#include "smartvector/types.hpp"

namespace smartvector {

class TermIndex;

enum class EdgeKind { DependsOn, Supersedes, Contradicts };

class VectorStore {
public:
    VectorStore();
    ~VectorStore();
    VectorStore(const VectorStore& other);
    VectorStore& operator=(const VectorStore& other);
    VectorStore(VectorStore&&) noexcept;
    VectorStore& operator=(VectorStore&&) noexcept;

    // ── lookup ──────────────────────────────────────────────────────────
    bool contains(const std::string& id) const;
    const SmartVector& get(const std::string& id) const;   // throws NotFoundError
    SmartVector& get_mutable(const std::string& id);       // throws NotFoundError
    std::size_t size() const { return vectors_.size(); }

    // Sorted by vector_id; the map ordering makes every iteration
    // deterministic, which the byte-identity guarantees rely on.
    const std::map<std::string, SmartVector>& vectors() const { return vectors_; }

    std::vector<std::string> doc_ids() const;
    const std::vector<std::string>& doc_chunk_ids(const std::string& doc_id) const;
    bool has_doc(const std::string& doc_id) const;
    int latest_version(const std::string& doc_id) const;  // 0 when absent

    // Chunks of one (doc_id, version), ordered by chunk_index.
    std::vector<const SmartVector*> version_chunks(const std::string& doc_id, int version) const;

    // Concatenation of a version's chunk contents in offset order. For the
    // latest version this reproduces the ingested text exactly.
    std::string reconstruct_text(const std::string& doc_id, int version) const;

    const std::vector<std::string>& recent_changes() const { return recent_changes_; }
    void push_recent_change(const std::string& id);
    void clear_recent_changes() { recent_changes_.clear(); }

    // ── mutation ────────────────────────────────────────────────────────

    // Chunk `text`, insert one UNCONSOLIDATED vector per chunk with
    // base_confidence = authority_prior(source). Chunks of the previous
    // latest version are deprecated; same-index predecessors get
    // supersedes/superseded_by links and their edges copied over.
    // Throws VersionConflictError unless doc_version exceeds every
    // existing version of doc_id.
    std::vector<std::string> ingest_document(
        const std::string& doc_id, int doc_version, const std::string& text,
        SourceAuthority source, Timestamp created_at,
        std::optional<Timestamp> validity_start = std::nullopt,
        std::optional<Timestamp> validity_end = std::nullopt,
        const std::string& author = {});

    // depends_on: records the edge plus the reverse depended_by entry.
    // supersedes(A,B): A supersedes B; B is deprecated if still live.
    // contradicts: symmetric entries in both contradiction lists.
    // Duplicate edges are no-ops; self-edges and unknown ids are rejected.
    void add_edge(const std::string& from_id, const std::string& to_id, EdgeKind kind);

    // Legal transitions only; throws IllegalTransitionError with the
    // offending from→to pair otherwise.
    void transition(const std::string& id, VectorStatus to, Timestamp now);

    // Low-level insert for loaders and generators. Rejects duplicate ids.
    SmartVector& insert(SmartVector v);

    // Copies old's depends_on/depended_by onto repl and appends the
    // reverse entries on the neighbours (old keeps its own edges: the
    // audit trail survives the transfer).
    void transfer_edges(const std::string& old_id, const std::string& repl_id);

    // ── similarity index ────────────────────────────────────────────────
    // Lazily rebuilt after any mutation batch.
    const TermIndex& index();
    void invalidate_index() { index_dirty_ = true; }

private:
    void register_in_doc(const SmartVector& v);
    void append_unique(std::vector<std::string>& list, const std::string& id);

    std::map<std::string, SmartVector> vectors_;
    std::map<std::string, std::vector<std::string>> by_doc_;
    std::vector<std::string> recent_changes_;
    std::unique_ptr<TermIndex> index_;
    bool index_dirty_ = true;
};

}  // namespace smartvector
