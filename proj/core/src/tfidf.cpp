#include "smartvector/tfidf.hpp"

#include <cmath>

#include "smartvector/store.hpp"

namespace smartvector {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::map<std::string, int> term_counts(const std::string& text) {
    std::map<std::string, int> counts;
    const auto toks = tokenize(text);
    for (const auto& t : toks) counts[t] += 1;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) counts[toks[i] + " " + toks[i + 1]] += 1;
    return counts;
}

void TermIndex::build(VectorStore& store) {
    postings_.clear();
    df_.clear();
    docs_.clear();
    doc_count_ = store.size();

    std::map<std::string, std::map<std::string, int>> counts;
    for (const auto& [id, v] : store.vectors()) {
        auto c = term_counts(v.content);
        for (const auto& [term, n] : c) {
            (void)n;
            df_[term] += 1;
        }
        counts.emplace(id, std::move(c));
    }

    for (auto& [id, c] : counts) {
        SmartVector& v = store.get_mutable(id);
        v.term_vector.clear();
        double norm_sq = 0.0;
        for (const auto& [term, n] : c) {
            const double w = static_cast<double>(n) * idf(term);
            v.term_vector[term] = w;
            norm_sq += w * w;
        }
        if (norm_sq > 0.0) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (auto& [term, w] : v.term_vector) w *= inv;
        }
        for (const auto& [term, w] : v.term_vector) {
            postings_[term].push_back({id, w});
        }
        docs_.emplace(id, &v.term_vector);
    }
}

double TermIndex::idf(const std::string& term) const {
    auto it = df_.find(term);
    const double df = it == df_.end() ? 0.0 : static_cast<double>(it->second);
    return std::log((1.0 + static_cast<double>(doc_count_)) / (1.0 + df)) + 1.0;
}

std::map<std::string, double> TermIndex::query_scores(const std::string& query_text) const {
    std::map<std::string, double> q;
    double norm_sq = 0.0;
    for (const auto& [term, n] : term_counts(query_text)) {
        const double w = static_cast<double>(n) * idf(term);
        q[term] = w;
        norm_sq += w * w;
    }
    std::map<std::string, double> scores;
    if (norm_sq == 0.0) return scores;
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (const auto& [term, w] : q) {
        auto it = postings_.find(term);
        if (it == postings_.end()) continue;
        for (const Posting& p : it->second) scores[p.id] += w * inv * p.weight;
    }
    return scores;
}

double TermIndex::cosine(const std::string& id_a, const std::string& id_b) const {
    auto a = docs_.find(id_a);
    auto b = docs_.find(id_b);
    if (a == docs_.end() || b == docs_.end()) return 0.0;
    const TermVector& va = *a->second;
    const TermVector& vb = *b->second;
    const TermVector& small = va.size() <= vb.size() ? va : vb;
    const TermVector& large = va.size() <= vb.size() ? vb : va;
    double dot = 0.0;
    for (const auto& [term, w] : small) {
        auto it = large.find(term);
        if (it != large.end()) dot += w * it->second;
    }
    return dot;
}

}  // namespace smartvector
