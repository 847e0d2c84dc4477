#include "smartvector/consolidation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "smartvector/tfidf.hpp"

namespace smartvector {

namespace {

bool is_numeric_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::set<std::string> unigram_set(const std::string& text) {
    std::set<std::string> s;
    for (auto& t : tokenize(text)) s.insert(std::move(t));
    return s;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 0.0;
    std::size_t inter = 0;
    for (const auto& t : a) inter += b.count(t);
    const std::size_t uni = a.size() + b.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

// Each side must mention a numeric token the other lacks.
bool numerics_diverge(const std::set<std::string>& a, const std::set<std::string>& b) {
    bool a_extra = false, b_extra = false, a_any = false, b_any = false;
    for (const auto& t : a) {
        if (!is_numeric_token(t)) continue;
        a_any = true;
        if (!b.count(t)) a_extra = true;
    }
    for (const auto& t : b) {
        if (!is_numeric_token(t)) continue;
        b_any = true;
        if (!a.count(t)) b_extra = true;
    }
    return a_any && b_any && a_extra && b_extra;
}

void append_unique(std::vector<std::string>& list, const std::string& id) {
    if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> detect_conflicts(VectorStore& store,
                                                                  const ConflictParams& params) {
    const TermIndex& index = store.index();

    struct Entry {
        const SmartVector* v;
        std::set<std::string> unigrams;
    };
    std::vector<Entry> entries;
    entries.reserve(store.size());
    for (const auto& [id, v] : store.vectors()) {
        if (v.status == VectorStatus::Archived) continue;
        entries.push_back({&v, unigram_set(v.content)});
    }

    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const SmartVector& a = *entries[i].v;
            const SmartVector& b = *entries[j].v;
            if (a.doc_id == b.doc_id) continue;  // version chains are not conflicts
            if (jaccard(entries[i].unigrams, entries[j].unigrams) < params.min_topic_jaccard)
                continue;
            if (index.cosine(a.vector_id, b.vector_id) > params.max_content_cosine) continue;
            if (!numerics_diverge(entries[i].unigrams, entries[j].unigrams)) continue;
            pairs.emplace_back(a.vector_id, b.vector_id);
        }
    }
    return pairs;
}

std::string resolve(const SmartVector& a, const SmartVector& b) {
    const auto ratio = [](const SmartVector& v) {
        return (static_cast<double>(v.positive_feedback) + 1.0) /
               (static_cast<double>(v.positive_feedback + v.negative_feedback) + 2.0);
    };
    int votes_a = 0;
    votes_a += a.created_at > b.created_at ? 1 : 0;
    votes_a += a.base_confidence > b.base_confidence ? 1 : 0;
    votes_a += ratio(a) > ratio(b) ? 1 : 0;
    return votes_a >= 2 ? a.vector_id : b.vector_id;
}

std::vector<std::pair<std::string, std::string>> build_relationships(
    VectorStore& store, const RelationshipParams& params) {
    std::vector<std::pair<std::string, std::string>> added;

    const auto has_edge = [&](const std::string& from, const std::string& to) {
        const auto& d = store.get(from).depends_on;
        return std::find(d.begin(), d.end(), to) != d.end();
    };
    const auto add = [&](const std::string& from, const std::string& to) {
        if (from == to || has_edge(from, to)) return;
        store.add_edge(from, to, EdgeKind::DependsOn);
        added.emplace_back(from, to);
    };

    // Structural: later chunks of one (doc, version) depend on chunk 0,
    // the preamble pattern.
    for (const auto& doc : store.doc_ids()) {
        std::map<int, std::vector<const SmartVector*>> by_version;
        for (const auto& id : store.doc_chunk_ids(doc)) {
            const SmartVector& v = store.get(id);
            by_version[v.doc_version].push_back(&v);
        }
        for (auto& [version, chunks] : by_version) {
            (void)version;
            std::sort(chunks.begin(), chunks.end(), [](const SmartVector* a, const SmartVector* b) {
                return a->chunk_index < b->chunk_index;
            });
            if (chunks.empty() || chunks.front()->chunk_index != 0) continue;
            for (std::size_t i = 1; i < chunks.size(); ++i)
                add(chunks[i]->vector_id, chunks.front()->vector_id);
        }
    }

    // Semantic: cross-document pairs whose content cosine clears the
    // threshold, directed newer -> older by default.
    const TermIndex& index = store.index();
    std::vector<const SmartVector*> all;
    all.reserve(store.size());
    for (const auto& [id, v] : store.vectors()) {
        if (v.status == VectorStatus::Archived) continue;
        all.push_back(&v);
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const SmartVector& a = *all[i];
            const SmartVector& b = *all[j];
            if (a.doc_id == b.doc_id) continue;
            if (index.cosine(a.vector_id, b.vector_id) < params.sim_threshold) continue;
            const bool a_newer = a.created_at > b.created_at;
            const SmartVector& newer = a_newer ? a : b;
            const SmartVector& older = a_newer ? b : a;
            if (params.newer_depends_on_older)
                add(newer.vector_id, older.vector_id);
            else
                add(older.vector_id, newer.vector_id);
        }
    }
    return added;
}

std::set<std::string> propagate(const SmartVector& changed, VectorStore& store,
                                const RippleParams& params) {
    std::set<std::string> visited;
    std::deque<std::pair<std::string, int>> queue;
    for (const auto& id : changed.depended_by) queue.emplace_back(id, 0);
    while (!queue.empty()) {
        auto [id, d] = queue.front();
        queue.pop_front();
        if (visited.count(id) || d >= params.d_max) continue;
        visited.insert(id);
        SmartVector& u = store.get_mutable(id);
        u.base_confidence =
            std::max(0.01, u.base_confidence - params.gamma / static_cast<double>(d + 1));
        u.contradictions.push_back(changed.vector_id);
        for (const auto& next : u.depended_by) queue.emplace_back(next, d + 1);
    }
    return visited;
}

ConsolidationReport run_consolidation(VectorStore& store, Timestamp now,
                                      const ConsolidationParams& params) {
    ConsolidationReport report;

    // 1. Live recalculation and dormancy.
    std::vector<std::string> active_ids;
    for (const auto& [id, v] : store.vectors())
        if (v.status == VectorStatus::Active) active_ids.push_back(id);
    for (const auto& id : active_ids) {
        report.recalculated += 1;
        if (is_dormant(store.get(id), now, params.confidence)) {
            store.transition(id, VectorStatus::Dormant, now);
            report.moved_dormant += 1;
        }
    }

    // 2. Contradictions: record symmetric entries, resolve each pair, and
    // deprecate the loser so stale-rate accounting sees it as superseded
    // knowledge. Re-runs add no new pairs and change no statuses.
    report.conflict_pairs = detect_conflicts(store, params.conflict);
    for (const auto& [a_id, b_id] : report.conflict_pairs) {
        SmartVector& a = store.get_mutable(a_id);
        SmartVector& b = store.get_mutable(b_id);
        const bool already =
            std::find(a.contradictions.begin(), a.contradictions.end(), b_id) !=
            a.contradictions.end();
        if (!already) report.new_conflict_pairs += 1;
        append_unique(a.contradictions, b_id);
        append_unique(b.contradictions, a_id);
        const std::string winner = resolve(a, b);
        report.conflict_winners.push_back(winner);
        const std::string& loser_id = winner == a_id ? b_id : a_id;
        SmartVector& loser = store.get_mutable(loser_id);
        if (transition_allowed(loser.status, VectorStatus::Deprecated))
            store.transition(loser_id, VectorStatus::Deprecated, now);
    }

    // 3. Relationship building.
    report.edges_added = build_relationships(store, params.relationship);

    // 4. Ripples for everything that changed since the last cycle.
    const std::vector<std::string> pending = store.recent_changes();
    for (const auto& id : pending) {
        if (!store.contains(id)) continue;
        const auto visited = propagate(store.get(id), store, params.ripple);
        report.ripples_run += 1;
        report.ripple_visited_total += static_cast<long>(visited.size());
    }
    store.clear_recent_changes();

    // 5. Promotion.
    std::vector<std::string> fresh;
    for (const auto& [id, v] : store.vectors())
        if (v.status == VectorStatus::Unconsolidated) fresh.push_back(id);
    for (const auto& id : fresh) {
        store.transition(id, VectorStatus::Active, now);
        report.promoted += 1;
    }

    store.invalidate_index();
    return report;
}

}  // namespace smartvector
