#include "smartvector/clock.hpp"

#include <cstdio>

namespace smartvector {

namespace {

// Civil-from-days / days-from-civil (Howard Hinnant's algorithms, public
// domain). Locale-free so serialized stores are byte-stable everywhere.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::int64_t whole_days_between(Timestamp from, Timestamp to) {
    if (to.secs <= from.secs) return 0;
    return (to.secs - from.secs) / 86400;
}

Timestamp make_timestamp(int year, int month, int day,
                         int hour, int minute, int second) {
    const std::int64_t days = days_from_civil(year, month, day);
    return {days * 86400 + hour * 3600 + minute * 60 + second};
}

std::string format_rfc3339(Timestamp t) {
    const std::int64_t days = floor_div(t.secs, 86400);
    std::int64_t rem = t.secs - days * 86400;
    int y, m, d;
    civil_from_days(days, y, m, d);
    const int hh = static_cast<int>(rem / 3600);
    rem %= 3600;
    const int mm = static_cast<int>(rem / 60);
    const int ss = static_cast<int>(rem % 60);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d, hh, mm, ss);
    return buf;
}

std::optional<Timestamp> parse_rfc3339(const std::string& s) {
    int y, mo, d, h, mi, se;
    char tz = 0;
    if (std::sscanf(s.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &y, &mo, &d, &h, &mi, &se, &tz) != 7)
        return std::nullopt;
    if (tz != 'Z' && tz != 'z') return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || se > 60)
        return std::nullopt;
    return make_timestamp(y, mo, d, h, mi, se);
}

std::string format_date(Timestamp t) {
    return format_rfc3339(t).substr(0, 10);
}

CivilDate civil_from_timestamp(Timestamp t) {
    int y, m, d;
    civil_from_days(floor_div(t.secs, 86400), y, m, d);
    return {y, m, d};
}

const char* month_name(int month) {
    static const char* names[] = {"january", "february", "march",     "april",
                                  "may",     "june",     "july",      "august",
                                  "september", "october", "november", "december"};
    if (month < 1 || month > 12) return "unknown";
    return names[month - 1];
}

}  // namespace smartvector
