#include <doctest.h>

#include <cmath>

#include "smartvector/confidence.hpp"

using namespace smartvector;

namespace {

const Timestamp kT0 = make_timestamp(2026, 1, 1);

SmartVector vector_with(double c0, long pos = 0, long neg = 0, long access = 0) {
    SmartVector v;
    v.vector_id = "v";
    v.doc_id = "d";
    v.base_confidence = c0;
    v.created_at = kT0;
    v.updated_at = kT0;
    v.positive_feedback = pos;
    v.negative_feedback = neg;
    v.access_count = access;
    v.source_offset_start = 0;
    v.source_offset_end = 1;
    return v;
}

}  // namespace

TEST_CASE("decay trajectory for c0=0.85, h=30") {
    const auto v = vector_with(0.85);
    CHECK(confidence(v, kT0) == doctest::Approx(0.85));  // zero-age identity
    CHECK(confidence(v, kT0.plus_days(30)) == doctest::Approx(0.425).epsilon(1e-9));
    CHECK(confidence(v, kT0.plus_days(60)) == doctest::Approx(0.2125).epsilon(1e-9));
    CHECK(confidence(v, kT0.plus_days(90)) == doctest::Approx(0.10625).epsilon(1e-9));
    CHECK(confidence(v, kT0.plus_days(180)) == doctest::Approx(0.01328125).epsilon(1e-9));
}

TEST_CASE("feedback and access reinforcement, hand-evaluated") {
    // 0.85 * 2^-1 + 0.03*5 - 0.08*2 = 0.415; + 0.01*ln(11) = 0.43897895...
    const auto v = vector_with(0.85, 5, 2, 10);
    CHECK(confidence(v, kT0.plus_days(30)) ==
          doctest::Approx(0.4389789527279837).epsilon(1e-12));
}

TEST_CASE("output clipped to [0.01, 1.0]") {
    auto floor_v = vector_with(0.85, 0, 50, 0);
    CHECK(confidence(floor_v, kT0) == doctest::Approx(0.01));
    auto ceil_v = vector_with(0.95, 40, 0, 1000);
    CHECK(confidence(ceil_v, kT0) == doctest::Approx(1.0));
}

TEST_CASE("age is in whole days") {
    const auto v = vector_with(0.85);
    // 29 days 23h -> age 29, not 30.
    const double just_before = confidence(v, kT0.plus_days(30).plus_seconds(-3600));
    const double at_30 = confidence(v, kT0.plus_days(30));
    CHECK(just_before > at_30);
    CHECK(at_30 == doctest::Approx(0.425));
    // now before created_at clamps to zero age.
    CHECK(confidence(v, kT0.plus_days(-5)) == doctest::Approx(0.85));
}

TEST_CASE("monotone decay with reinforcement fixed") {
    const auto v = vector_with(0.9, 3, 1, 7);
    double prev = 2.0;
    for (int d = 0; d <= 365; d += 7) {
        const double c = confidence(v, kT0.plus_days(d));
        CHECK(c <= prev + 1e-12);
        CHECK(c >= 0.01);
        CHECK(c <= 1.0);
        prev = c;
    }
}

TEST_CASE("one correction outweighs one acceptance") {
    const auto base = vector_with(0.5);
    const auto plus = vector_with(0.5, 1, 0, 0);
    const auto minus = vector_with(0.5, 0, 1, 0);
    const Timestamp t = kT0.plus_days(10);
    const double up = confidence(plus, t) - confidence(base, t);
    const double down = confidence(base, t) - confidence(minus, t);
    CHECK(up == doctest::Approx(0.03));
    CHECK(down == doctest::Approx(0.08));
    CHECK(down > up);
}

TEST_CASE("access reinforcement has diminishing returns") {
    double prev_delta = 1.0;
    for (long n = 0; n < 40; ++n) {
        const double delta = confidence(vector_with(0.4, 0, 0, n + 1), kT0) -
                             confidence(vector_with(0.4, 0, 0, n), kT0);
        CHECK(delta > 0.0);
        CHECK(delta < prev_delta);
        prev_delta = delta;
    }
}

TEST_CASE("one negative after one positive lands below the prior") {
    const auto v = vector_with(0.85, 1, 1, 0);
    CHECK(confidence(v, kT0) == doctest::Approx(0.80));  // net -0.05
}

TEST_CASE("temporal score inside and outside the validity window") {
    auto v = vector_with(0.85);
    v.temporal_validity_start = kT0;
    v.temporal_validity_end = kT0.plus_days(60);

    CHECK(temporal_score(v, kT0) == doctest::Approx(1.0));
    CHECK(temporal_score(v, kT0.plus_days(30)) == doctest::Approx(0.5));
    CHECK(temporal_score(v, kT0.plus_days(61)) == doctest::Approx(0.05));  // floor
    CHECK(temporal_score(v, kT0.plus_days(-1)) == doctest::Approx(0.05));

    // Unbounded sides stay open.
    v.temporal_validity_end = std::nullopt;
    CHECK(temporal_score(v, kT0.plus_days(400)) > 0.0);
    v.temporal_validity_start = std::nullopt;
    CHECK(temporal_score(v, kT0.plus_days(-400)) == doctest::Approx(1.0));  // age clamps
}

TEST_CASE("dormancy threshold") {
    const auto unreinforced = vector_with(0.85);
    CHECK(is_dormant(unreinforced, kT0.plus_days(90)));   // 0.10625 < 0.15
    CHECK(!is_dormant(unreinforced, kT0));
    // 0.10625 + 0.01*ln(51) = 0.14556... still dormant.
    const auto accessed = vector_with(0.85, 0, 0, 50);
    CHECK(confidence(accessed, kT0.plus_days(90)) ==
          doctest::Approx(0.1455682563272433).epsilon(1e-12));
    CHECK(is_dormant(accessed, kT0.plus_days(90)));
}
