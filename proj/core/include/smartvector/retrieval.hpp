#pragma once
// Four-signal reranking over the tf-idf first stage:
//
//   final = w_sim*sim + w_time*temporal + w_conf*confidence + w_rel*relational
//
// All four signals are evaluated at the query's reference time. Retrieval
// is the reconsolidation event: every returned vector's access_count is
// incremented by one (candidates that were merely scored are not touched).

#include <functional>
#include <string>
#include <vector>

#include "smartvector/confidence.hpp"
#include "smartvector/store.hpp"

namespace smartvector {

struct ScoreWeights {
    double similarity = 0.35;
    double temporal = 0.25;
    double confidence = 0.25;
    double relational = 0.15;

    // Leave-one-out variant with the remaining weights renormalized.
    ScoreWeights without(int signal_index) const;
    double sum() const { return similarity + temporal + confidence + relational; }
};

struct RetrievalParams {
    int candidate_pool = 8;  // first-stage K
    ConfidenceParams confidence;
};

struct ScoredResult {
    std::string vector_id;
    double sim = 0.0;
    double temporal = 0.0;
    double confidence = 0.0;
    double relational = 0.0;
    double final = 0.0;
    VectorStatus status = VectorStatus::Unconsolidated;
};

// min(0.3, 0.1 * ln(1 + E)) where E counts depends_on + depended_by edges.
double relational_bonus(const SmartVector& v);

// Signal breakdown for one vector given a precomputed similarity.
ScoredResult score_vector(const SmartVector& v, double sim, Timestamp t,
                          const ScoreWeights& weights, const ConfidenceParams& params);

using PoolFilter = std::function<bool(const SmartVector&)>;

// Everything except ARCHIVED stays retrievable: DEPRECATED vectors are
// needed for time-point answers and the stale-rate metric, DORMANT ones
// are suppressed by their own confidence signal.
bool default_pool_filter(const SmartVector& v);

// Top-`candidate_pool` by similarity, reranked by final score, top-k
// returned in non-increasing final order (ties: lexicographically smallest
// vector_id). Returned vectors are reinforced; a DORMANT vector whose
// live confidence has recovered above dormant_threshold is re-promoted.
std::vector<ScoredResult> retrieve(VectorStore& store, const std::string& query_text,
                                   Timestamp t, int k, const ScoreWeights& weights = {},
                                   const RetrievalParams& params = {},
                                   const PoolFilter& pool_filter = default_pool_filter);

// User acceptance / correction; refreshes updated_at.
void record_feedback(VectorStore& store, const std::string& vector_id, bool positive,
                     Timestamp now);

}  // namespace smartvector
