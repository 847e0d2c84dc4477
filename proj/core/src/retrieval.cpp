#include "smartvector/retrieval.hpp"

#include <algorithm>
#include <cmath>

#include "smartvector/tfidf.hpp"

namespace smartvector {

ScoreWeights ScoreWeights::without(int signal_index) const {
    ScoreWeights w = *this;
    switch (signal_index) {
        case 0: w.similarity = 0.0; break;
        case 1: w.temporal = 0.0; break;
        case 2: w.confidence = 0.0; break;
        case 3: w.relational = 0.0; break;
    }
    const double s = w.sum();
    if (s > 0.0) {
        w.similarity /= s;
        w.temporal /= s;
        w.confidence /= s;
        w.relational /= s;
    }
    return w;
}

double relational_bonus(const SmartVector& v) {
    const double edges = static_cast<double>(v.depends_on.size() + v.depended_by.size());
    return std::min(0.3, 0.1 * std::log(1.0 + edges));
}

ScoredResult score_vector(const SmartVector& v, double sim, Timestamp t,
                          const ScoreWeights& weights, const ConfidenceParams& params) {
    ScoredResult r;
    r.vector_id = v.vector_id;
    r.sim = sim;
    r.temporal = temporal_score(v, t, params);
    r.confidence = confidence(v, t, params);
    r.relational = relational_bonus(v);
    r.final = weights.similarity * r.sim + weights.temporal * r.temporal +
              weights.confidence * r.confidence + weights.relational * r.relational;
    r.status = v.status;
    return r;
}

bool default_pool_filter(const SmartVector& v) {
    return v.status != VectorStatus::Archived;
}

std::vector<ScoredResult> retrieve(VectorStore& store, const std::string& query_text,
                                   Timestamp t, int k, const ScoreWeights& weights,
                                   const RetrievalParams& params, const PoolFilter& pool_filter) {
    std::vector<ScoredResult> out;
    if (k < 1 || store.size() == 0) return out;

    const TermIndex& index = store.index();
    const auto scores = index.query_scores(query_text);

    // First stage: top candidate_pool by similarity over the eligible pool.
    // Vectors sharing no term score 0 and still count as candidates so tiny
    // stores behave sensibly.
    std::vector<std::pair<double, const SmartVector*>> pool;
    pool.reserve(store.size());
    for (const auto& [id, v] : store.vectors()) {
        if (!pool_filter(v)) continue;
        auto it = scores.find(id);
        pool.emplace_back(it == scores.end() ? 0.0 : it->second, &v);
    }
    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second->vector_id < b.second->vector_id;
    });
    if (pool.size() > static_cast<std::size_t>(params.candidate_pool))
        pool.resize(static_cast<std::size_t>(params.candidate_pool));

    // Second stage: rerank by the combined score.
    for (const auto& [sim, v] : pool) out.push_back(score_vector(*v, sim, t, weights, params.confidence));
    std::sort(out.begin(), out.end(), [](const ScoredResult& a, const ScoredResult& b) {
        if (a.final != b.final) return a.final > b.final;
        return a.vector_id < b.vector_id;
    });
    if (out.size() > static_cast<std::size_t>(k)) out.resize(static_cast<std::size_t>(k));

    // Reconsolidation: reinforce exactly the returned vectors.
    for (const auto& r : out) {
        SmartVector& v = store.get_mutable(r.vector_id);
        v.access_count += 1;
        if (v.status == VectorStatus::Dormant &&
            confidence(v, t, params.confidence) >= params.confidence.dormant_threshold) {
            v.status = VectorStatus::Active;
            v.updated_at = t;
        }
    }
    return out;
}

void record_feedback(VectorStore& store, const std::string& vector_id, bool positive,
                     Timestamp now) {
    SmartVector& v = store.get_mutable(vector_id);
    if (positive)
        v.positive_feedback += 1;
    else
        v.negative_feedback += 1;
    v.updated_at = now;
}

}  // namespace smartvector
