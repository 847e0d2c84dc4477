#pragma once
// Offset-preserving chunking. Chunks tile the source text exactly (each
// span runs through the separator that follows it), so concatenating a
// version's chunks in offset order reproduces the ingested text verbatim.

#include <string>
#include <vector>

namespace smartvector {

struct ChunkSpan {
    long start = 0;  // character offsets into the source, [start, end)
    long end = 0;
};

// Split on blank-line paragraph boundaries; paragraphs longer than
// max_chunk_chars are further split at the sentence boundary nearest the
// midpoint (whitespace, then hard midpoint, as fallbacks).
std::vector<ChunkSpan> chunk_text(const std::string& text, std::size_t max_chunk_chars = 800);

}  // namespace smartvector
