#pragma once
// UTC timestamps with second precision. All arithmetic the scoring layer
// cares about is in whole days, so nothing finer is stored.

#include <cstdint>
#include <optional>
#include <string>

namespace smartvector {

struct Timestamp {
    std::int64_t secs = 0;  // seconds since Unix epoch, UTC

    friend bool operator==(Timestamp a, Timestamp b) { return a.secs == b.secs; }
    friend bool operator!=(Timestamp a, Timestamp b) { return a.secs != b.secs; }
    friend bool operator<(Timestamp a, Timestamp b) { return a.secs < b.secs; }
    friend bool operator<=(Timestamp a, Timestamp b) { return a.secs <= b.secs; }
    friend bool operator>(Timestamp a, Timestamp b) { return a.secs > b.secs; }
    friend bool operator>=(Timestamp a, Timestamp b) { return a.secs >= b.secs; }

    Timestamp plus_days(std::int64_t d) const { return {secs + d * 86400}; }
    Timestamp plus_seconds(std::int64_t s) const { return {secs + s}; }
};

// Whole days from `from` to `to`, floored, clamped at 0.
std::int64_t whole_days_between(Timestamp from, Timestamp to);

// Timestamp for a UTC civil date/time.
Timestamp make_timestamp(int year, int month, int day,
                         int hour = 0, int minute = 0, int second = 0);

// RFC 3339, second precision: 2026-04-01T00:00:00Z
std::string format_rfc3339(Timestamp t);
std::optional<Timestamp> parse_rfc3339(const std::string& s);

// "YYYY-MM-DD" date part only.
std::string format_date(Timestamp t);

// Lowercase English month name ("january".."december") and civil fields,
// used by the benchmark generator's text templates.
struct CivilDate {
    int year;
    int month;  // 1..12
    int day;    // 1..31
};
CivilDate civil_from_timestamp(Timestamp t);
const char* month_name(int month);

}  // namespace smartvector
