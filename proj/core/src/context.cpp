#include "smartvector/context.hpp"

#include <algorithm>
#include <cstdio>

namespace smartvector {

namespace {

constexpr int kRuleWidth = 68;

std::string fixed3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", x);
    return buf;
}

std::string doc_rule(int n, int conflicts_with) {
    std::string head = "-- Document " + std::to_string(n);
    if (conflicts_with > 0) head += " (CONFLICTS WITH DOC " + std::to_string(conflicts_with) + ")";
    head += ' ';
    while (static_cast<int>(head.size()) < kRuleWidth) head += '-';
    return head;
}

}  // namespace

std::string assemble_context(const std::vector<ScoredResult>& results, const VectorStore& store,
                             Timestamp t) {
    (void)t;
    std::string out;
    out += "=== SMART VECTOR RETRIEVAL CONTEXT ===\n";
    out += "INSTRUCTIONS:\n";
    out += "- Documents ranked by relevance + recency + confidence + relational importance\n";
    out += "- Confidence reflects source authority, age decay, and user feedback\n";
    out += "- If conflict warnings are present, prefer higher-confidence source\n";
    out += "- Always cite source, version, and date\n";

    std::vector<std::string> above;  // ids of higher-ranked results
    for (std::size_t i = 0; i < results.size(); ++i) {
        const ScoredResult& r = results[i];
        const SmartVector& v = store.get(r.vector_id);

        int conflicts_with = 0;
        for (const auto& c : v.contradictions) {
            auto it = std::find(above.begin(), above.end(), c);
            if (it != above.end()) {
                conflicts_with = static_cast<int>(it - above.begin()) + 1;
                break;
            }
        }

        out += '\n';
        out += doc_rule(static_cast<int>(i) + 1, conflicts_with);
        out += '\n';
        out += "Source: " + v.doc_id + " | Author: " + (v.author.empty() ? "unknown" : v.author) +
               " | Version: v" + std::to_string(v.doc_version) + " | " + to_string(v.status) + '\n';
        out += "Created: " + format_date(v.created_at) + '\n';
        out += "Scores: sim=" + fixed3(r.sim) + ", temporal=" + fixed3(r.temporal) +
               ", confidence=" + fixed3(r.confidence) + ", relational=" + fixed3(r.relational) +
               '\n';
        out += "FINAL: " + fixed3(r.final) + '\n';
        out += "Edges: " + std::to_string(v.depends_on.size() + v.depended_by.size()) +
               " | Accesses: " + std::to_string(v.access_count) + " | Feedback: +" +
               std::to_string(v.positive_feedback) + "/-" + std::to_string(v.negative_feedback) +
               '\n';
        out += '\n';
        out += v.content;
        if (out.empty() || out.back() != '\n') out += '\n';

        above.push_back(r.vector_id);
    }
    return out;
}

}  // namespace smartvector
