#pragma once
// SmartVector object model: identity + content + sparse term vector, plus
// the three augmentation groups (temporal, confidence, relational) and the
// lifecycle status.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smartvector/clock.hpp"

namespace smartvector {

enum class VectorStatus { Unconsolidated, Active, Dormant, Deprecated, Archived };

const char* to_string(VectorStatus s);
std::optional<VectorStatus> status_from_string(const std::string& s);

// Legal lifecycle moves. Nothing is ever deleted; ARCHIVED is terminal.
bool transition_allowed(VectorStatus from, VectorStatus to);

enum class SourceAuthority {
    OfficialDB,
    Policy,
    TechDoc,
    Wiki,
    Email,
    MeetingNotes,
    Chat,
    Unknown,
};

// Default source-authority priors used to initialize base_confidence.
double authority_prior(SourceAuthority source);
const char* to_string(SourceAuthority s);
std::optional<SourceAuthority> authority_from_string(const std::string& s);

using TermVector = std::map<std::string, double>;

struct SmartVector {
    // Identity
    std::string vector_id;
    std::string doc_id;
    int doc_version = 1;       // > 0
    int chunk_index = 0;       // >= 0

    // Content
    std::string content;
    std::string content_hash;  // sha256 hex of content
    std::string author;        // display metadata for context assembly; may be empty
    TermVector term_vector;    // tf-idf weights, rebuilt from content (not persisted)

    // Temporal
    Timestamp created_at;
    Timestamp updated_at;
    std::optional<Timestamp> temporal_validity_start;
    std::optional<Timestamp> temporal_validity_end;

    // Confidence
    double base_confidence = 0.2;  // clamped to [0.01, 1.0] after every mutation
    long access_count = 0;
    long positive_feedback = 0;
    long negative_feedback = 0;
    std::optional<Timestamp> last_validated;
    double half_life_days = 30.0;

    // Relational
    std::vector<std::string> depends_on;
    std::vector<std::string> depended_by;
    std::optional<std::string> supersedes;
    std::optional<std::string> superseded_by;
    std::vector<std::string> contradictions;

    // Lifecycle
    VectorStatus status = VectorStatus::Unconsolidated;
    long source_offset_start = 0;
    long source_offset_end = 0;  // start < end
};

// Canonical id: {doc_id}:v{doc_version}:c{chunk_index}
std::string make_vector_id(const std::string& doc_id, int doc_version, int chunk_index);

inline double clamp_confidence(double c) {
    if (c < 0.01) return 0.01;
    if (c > 1.0) return 1.0;
    return c;
}

struct NotFoundError : std::runtime_error {
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};
struct VersionConflictError : std::runtime_error {
    explicit VersionConflictError(const std::string& what) : std::runtime_error(what) {}
};
struct IllegalTransitionError : std::runtime_error {
    explicit IllegalTransitionError(const std::string& what) : std::runtime_error(what) {}
};
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smartvector
