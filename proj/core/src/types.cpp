#include "smartvector/types.hpp"

namespace smartvector {

const char* to_string(VectorStatus s) {
    switch (s) {
        case VectorStatus::Unconsolidated: return "UNCONSOLIDATED";
        case VectorStatus::Active: return "ACTIVE";
        case VectorStatus::Dormant: return "DORMANT";
        case VectorStatus::Deprecated: return "DEPRECATED";
        case VectorStatus::Archived: return "ARCHIVED";
    }
    return "UNKNOWN";
}

std::optional<VectorStatus> status_from_string(const std::string& s) {
    if (s == "UNCONSOLIDATED") return VectorStatus::Unconsolidated;
    if (s == "ACTIVE") return VectorStatus::Active;
    if (s == "DORMANT") return VectorStatus::Dormant;
    if (s == "DEPRECATED") return VectorStatus::Deprecated;
    if (s == "ARCHIVED") return VectorStatus::Archived;
    return std::nullopt;
}

bool transition_allowed(VectorStatus from, VectorStatus to) {
    using S = VectorStatus;
    switch (from) {
        case S::Unconsolidated:
            return to == S::Active || to == S::Deprecated;
        case S::Active:
            return to == S::Dormant || to == S::Deprecated;
        case S::Dormant:
            return to == S::Active || to == S::Deprecated;
        case S::Deprecated:
            return to == S::Archived;
        case S::Archived:
            return false;  // terminal
    }
    return false;
}

double authority_prior(SourceAuthority source) {
    switch (source) {
        case SourceAuthority::OfficialDB: return 0.95;
        case SourceAuthority::Policy: return 0.90;
        case SourceAuthority::TechDoc: return 0.85;
        case SourceAuthority::Wiki: return 0.75;
        case SourceAuthority::Email: return 0.50;
        case SourceAuthority::MeetingNotes: return 0.45;
        case SourceAuthority::Chat: return 0.30;
        case SourceAuthority::Unknown: return 0.20;
    }
    return 0.20;
}

const char* to_string(SourceAuthority s) {
    switch (s) {
        case SourceAuthority::OfficialDB: return "official_db";
        case SourceAuthority::Policy: return "policy";
        case SourceAuthority::TechDoc: return "tech_doc";
        case SourceAuthority::Wiki: return "wiki";
        case SourceAuthority::Email: return "email";
        case SourceAuthority::MeetingNotes: return "meeting_notes";
        case SourceAuthority::Chat: return "chat";
        case SourceAuthority::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<SourceAuthority> authority_from_string(const std::string& s) {
    if (s == "official_db") return SourceAuthority::OfficialDB;
    if (s == "policy") return SourceAuthority::Policy;
    if (s == "tech_doc") return SourceAuthority::TechDoc;
    if (s == "wiki") return SourceAuthority::Wiki;
    if (s == "email") return SourceAuthority::Email;
    if (s == "meeting_notes") return SourceAuthority::MeetingNotes;
    if (s == "chat") return SourceAuthority::Chat;
    if (s == "unknown") return SourceAuthority::Unknown;
    return std::nullopt;
}

std::string make_vector_id(const std::string& doc_id, int doc_version, int chunk_index) {
    return doc_id + ":v" + std::to_string(doc_version) + ":c" + std::to_string(chunk_index);
}

}  // namespace smartvector
