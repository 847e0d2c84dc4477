#include <doctest.h>

#include "smartvector/clock.hpp"

using namespace smartvector;

TEST_CASE("rfc3339 round trip") {
    const Timestamp t = make_timestamp(2026, 4, 1, 9, 30, 15);
    CHECK(format_rfc3339(t) == "2026-04-01T09:30:15Z");
    auto parsed = parse_rfc3339("2026-04-01T09:30:15Z");
    REQUIRE(parsed.has_value());
    CHECK(parsed->secs == t.secs);
    CHECK(!parse_rfc3339("2026-04-01 09:30:15").has_value());
    CHECK(!parse_rfc3339("garbage").has_value());
}

TEST_CASE("whole day arithmetic floors and clamps") {
    const Timestamp t0 = make_timestamp(2026, 1, 1);
    CHECK(whole_days_between(t0, t0) == 0);
    CHECK(whole_days_between(t0, t0.plus_seconds(86399)) == 0);
    CHECK(whole_days_between(t0, t0.plus_days(30)) == 30);
    CHECK(whole_days_between(t0, t0.plus_days(30).plus_seconds(-1)) == 29);
    CHECK(whole_days_between(t0.plus_days(5), t0) == 0);  // clamped
}

TEST_CASE("civil date fields") {
    const auto d = civil_from_timestamp(make_timestamp(2025, 12, 31, 23, 59, 59));
    CHECK(d.year == 2025);
    CHECK(d.month == 12);
    CHECK(d.day == 31);
    CHECK(std::string(month_name(3)) == "march");
    CHECK(format_date(make_timestamp(2026, 4, 17)) == "2026-04-17");
}
