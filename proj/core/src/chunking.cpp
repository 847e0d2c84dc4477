#include "smartvector/chunking.hpp"

#include <cctype>
#include <cstdlib>

namespace smartvector {

namespace {

// A blank-line boundary is a newline followed by optional horizontal
// whitespace and another newline. The separator run belongs to the chunk
// before it so that spans tile the text.
std::size_t find_paragraph_end(const std::string& text, std::size_t from) {
    std::size_t i = from;
    while (i < text.size()) {
        if (text[i] == '\n') {
            std::size_t j = i + 1;
            while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
            if (j < text.size() && text[j] == '\n') {
                // Consume the whole separator run (all blank lines).
                std::size_t k = j + 1;
                while (k < text.size() &&
                       (text[k] == '\n' || text[k] == ' ' || text[k] == '\t' || text[k] == '\r')) {
                    // Stop extending once the run would eat non-blank content:
                    // only whitespace lines may be absorbed.
                    std::size_t probe = k;
                    bool blank = true;
                    while (probe < text.size() && text[probe] != '\n') {
                        if (text[probe] != ' ' && text[probe] != '\t' && text[probe] != '\r') {
                            blank = false;
                            break;
                        }
                        ++probe;
                    }
                    if (!blank) break;
                    k = (probe < text.size()) ? probe + 1 : text.size();
                }
                return k;
            }
        }
        ++i;
    }
    return text.size();
}

// Split point nearest the midpoint: prefer a position just after ".", "!"
// or "?" followed by whitespace; then any whitespace; then the midpoint.
std::size_t split_point(const std::string& text, std::size_t start, std::size_t end) {
    const std::size_t mid = start + (end - start) / 2;
    std::size_t best = std::string::npos;
    std::size_t best_dist = end;
    for (std::size_t i = start + 1; i + 1 < end; ++i) {
        const char c = text[i - 1];
        if ((c == '.' || c == '!' || c == '?') && std::isspace(static_cast<unsigned char>(text[i]))) {
            const std::size_t pos = i + 1;  // start of the next sentence
            const std::size_t dist = pos > mid ? pos - mid : mid - pos;
            if (pos > start && pos < end && dist < best_dist) {
                best = pos;
                best_dist = dist;
            }
        }
    }
    if (best != std::string::npos) return best;
    for (std::size_t i = start + 1; i + 1 < end; ++i) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            const std::size_t dist = i > mid ? i - mid : mid - i;
            if (dist < best_dist) {
                best = i + 1;
                best_dist = dist;
            }
        }
    }
    if (best != std::string::npos && best > start && best < end) return best;
    return mid;
}

void split_long(const std::string& text, std::size_t start, std::size_t end,
                std::size_t limit, std::vector<ChunkSpan>& out) {
    if (end - start <= limit || end - start < 2) {
        out.push_back({static_cast<long>(start), static_cast<long>(end)});
        return;
    }
    const std::size_t mid = split_point(text, start, end);
    if (mid <= start || mid >= end) {
        out.push_back({static_cast<long>(start), static_cast<long>(end)});
        return;
    }
    split_long(text, start, mid, limit, out);
    split_long(text, mid, end, limit, out);
}

}  // namespace

std::vector<ChunkSpan> chunk_text(const std::string& text, std::size_t max_chunk_chars) {
    std::vector<ChunkSpan> spans;
    if (text.empty()) return spans;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = find_paragraph_end(text, pos);
        split_long(text, pos, end, max_chunk_chars, spans);
        pos = end;
    }
    return spans;
}

}  // namespace smartvector
