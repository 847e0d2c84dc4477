#pragma once
// LLM-facing context assembly: ranked documents annotated with their score
// breakdown, lifecycle status, reinforcement counters and conflict flags.

#include <string>
#include <vector>

#include "smartvector/retrieval.hpp"
#include "smartvector/store.hpp"

namespace smartvector {

// Renders the retrieval context block. Results must already be in final
// order; a document whose contradictions intersect a higher-ranked result
// is headed "(CONFLICTS WITH DOC n)".
std::string assemble_context(const std::vector<ScoredResult>& results, const VectorStore& store,
                             Timestamp t);

}  // namespace smartvector
