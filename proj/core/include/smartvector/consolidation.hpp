#pragma once
// The background slow path. One cycle, five steps, fixed order:
//   1. recompute confidence for ACTIVE vectors, demote below-threshold ones
//   2. detect contradictions, record them, resolve each pair
//   3. build structural + semantic depends_on edges
//   4. propagate ripples for every pending change, then clear the queue
//   5. promote UNCONSOLIDATED -> ACTIVE
//
// Must never run concurrently with ingestion or updates (exclusive-writer
// batch); reads against the pre-cycle snapshot remain valid meanwhile.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smartvector/confidence.hpp"
#include "smartvector/store.hpp"

namespace smartvector {

struct RippleParams {
    double gamma = 0.15;
    int d_max = 2;
};

struct ConflictParams {
    double min_topic_jaccard = 0.4;   // unigram-set overlap floor
    double max_content_cosine = 0.6;  // tf-idf cosine ceiling
};

struct RelationshipParams {
    double sim_threshold = 0.75;
    // Semantic edges run newer -> older by default (a later document
    // depends on the earlier fact it elaborates).
    bool newer_depends_on_older = true;
};

struct ConsolidationParams {
    ConfidenceParams confidence;
    ConflictParams conflict;
    RelationshipParams relationship;
    RippleParams ripple;
};

struct ConsolidationReport {
    long recalculated = 0;
    long moved_dormant = 0;
    std::vector<std::pair<std::string, std::string>> conflict_pairs;
    std::vector<std::string> conflict_winners;  // parallel to conflict_pairs
    long new_conflict_pairs = 0;
    std::vector<std::pair<std::string, std::string>> edges_added;
    long ripples_run = 0;
    long ripple_visited_total = 0;
    long promoted = 0;
};

// Candidate contradictions: cross-lineage, non-ARCHIVED pairs with high
// topic overlap (Jaccard over content unigram sets) but low tf-idf cosine,
// where each side mentions a numeric token the other lacks. Pairs are
// returned with ids in ascending order.
std::vector<std::pair<std::string, std::string>> detect_conflicts(
    VectorStore& store, const ConflictParams& params = {});

// Majority vote over recency, source authority (base_confidence) and
// add-one-smoothed feedback ratio. Ties on a criterion go to b, exactly
// as the reference listing compares.
std::string resolve(const SmartVector& a, const SmartVector& b);

// Structural edges: chunk k>=1 of a (doc, version) depends on chunk 0.
// Semantic edges: cross-document pairs whose cosine reaches the threshold.
// Idempotent; returns the edges actually added as (from, to).
std::vector<std::pair<std::string, std::string>> build_relationships(
    VectorStore& store, const RelationshipParams& params = {});

// Bounded BFS along depended_by edges. A node at depth d < d_max loses
// gamma/(d+1) base confidence (floored at 0.01) and gets the changed id
// appended to its contradictions; its dependents enqueue at d+1. Returns
// the visited set.
std::set<std::string> propagate(const SmartVector& changed, VectorStore& store,
                                const RippleParams& params = {});

ConsolidationReport run_consolidation(VectorStore& store, Timestamp now,
                                      const ConsolidationParams& params = {});

}  // namespace smartvector
