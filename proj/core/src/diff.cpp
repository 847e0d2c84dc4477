#include "smartvector/diff.hpp"

#include <algorithm>
#include <cctype>

namespace smartvector {

namespace {

struct Unit {
    long start;
    long end;  // [start, end) in the source string
};

// Units tile the text: each unit is an optional whitespace run followed by
// a token (a trailing whitespace run forms a final unit of its own).
std::vector<Unit> split_units(const std::string& s) {
    std::vector<Unit> units;
    long i = 0;
    const long n = static_cast<long>(s.size());
    while (i < n) {
        long start = i;
        while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        while (i < n && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        units.push_back({start, i});
    }
    return units;
}

bool unit_equal(const std::string& a, Unit ua, const std::string& b, Unit ub) {
    const long la = ua.end - ua.start, lb = ub.end - ub.start;
    if (la != lb) return false;
    return a.compare(ua.start, la, b, ub.start, lb) == 0;
}

}  // namespace

std::vector<DiffChange> diff(const std::string& old_text, const std::string& new_text) {
    std::vector<DiffChange> changes;
    if (old_text == new_text) return changes;

    const auto a = split_units(old_text);
    const auto b = split_units(new_text);
    const std::size_t n = a.size(), m = b.size();

    // Longest common subsequence over units. Matching equal units greedily
    // is always LCS-optimal, so the walk below only consults the table to
    // decide which side to advance inside a changed region.
    std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = m; j-- > 0;) {
            if (unit_equal(old_text, a[i], new_text, b[j]))
                lcs[i][j] = lcs[i + 1][j + 1] + 1;
            else
                lcs[i][j] = std::max(lcs[i + 1][j], lcs[i][j + 1]);
        }
    }

    struct Segment {
        std::size_t i0, i1, j0, j1;  // unit ranges [i0,i1) in a, [j0,j1) in b
    };
    std::vector<Segment> segments;
    std::size_t i = 0, j = 0, i0 = 0, j0 = 0;
    bool open = false;
    while (i < n || j < m) {
        if (i < n && j < m && unit_equal(old_text, a[i], new_text, b[j])) {
            if (open) {
                segments.push_back({i0, i, j0, j});
                open = false;
            }
            ++i;
            ++j;
        } else {
            if (!open) {
                i0 = i;
                j0 = j;
                open = true;
            }
            if (j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j]))
                ++j;
            else
                ++i;
        }
    }
    if (open) segments.push_back({i0, i, j0, j});

    for (const Segment& s : segments) {
        long os = s.i0 < n ? a[s.i0].start : static_cast<long>(old_text.size());
        long oe = s.i1 > s.i0 ? a[s.i1 - 1].end : os;
        long ns = s.j0 < m ? b[s.j0].start : static_cast<long>(new_text.size());
        long ne = s.j1 > s.j0 ? b[s.j1 - 1].end : ns;

        // Trim the region to the minimal differing characters.
        while (os < oe && ns < ne && old_text[os] == new_text[ns]) {
            ++os;
            ++ns;
        }
        while (oe > os && ne > ns && old_text[oe - 1] == new_text[ne - 1]) {
            --oe;
            --ne;
        }
        if (os == oe && ns == ne) continue;
        changes.push_back({os, oe, new_text.substr(ns, ne - ns)});
    }
    return changes;
}

std::string apply_changes(const std::string& old_text, const std::vector<DiffChange>& changes) {
    std::string out;
    long pos = 0;
    for (const auto& c : changes) {
        out.append(old_text, pos, c.start - pos);
        out += c.replacement;
        pos = c.end;
    }
    out.append(old_text, pos, old_text.size() - pos);
    return out;
}

}  // namespace smartvector
