#pragma once
// Token-level diff with character-exact offsets. Units are whitespace
// runs + the token that follows, compared verbatim, so whitespace-only
// edits are still detected; adjacent changed units coalesce into one
// DiffChange and the change region is trimmed to the minimal differing
// characters. Applying the change list to the old text reproduces the
// new text byte-exactly.

#include <string>
#include <vector>

namespace smartvector {

struct DiffChange {
    long start = 0;  // character offsets into the OLD text, start <= end
    long end = 0;
    std::string replacement;
};

// Non-overlapping, sorted by start. Equal texts yield an empty list.
std::vector<DiffChange> diff(const std::string& old_text, const std::string& new_text);

// Applies a sorted, non-overlapping change list.
std::string apply_changes(const std::string& old_text, const std::vector<DiffChange>& changes);

}  // namespace smartvector
