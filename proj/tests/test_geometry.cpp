#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "brs/geometry.hpp"
#include "brs/oracle.hpp"

using namespace brs;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

const Depot kHighMiddle{2, 78.0, 10.0 * std::sqrt(35.0)};

}  // namespace

TEST_CASE("tour length evaluates the triangle perimeter") {
    CHECK(tour_length(kHighMiddle, {68.0, 88.0}) == doctest::Approx(140.0).epsilon(1e-12));
    CHECK(tour_length({1, 0.0, 0.0}, {0.0, 5.0}) == doctest::Approx(10.0));
    const double expected = std::sqrt(424.0) + 68.0 + std::sqrt(2600.0);
    CHECK(tour_length({1, 18.0, 10.0}, {0.0, 68.0}) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("degenerate tours") {
    // a == b is an out-and-back trip
    CHECK(tour_length({1, 3.0, 4.0}, {0.0, 0.0}) == doctest::Approx(10.0));
    // on-barrier depot inside the segment
    CHECK(tour_length({1, 2.0, 0.0}, {0.0, 6.0}) == doctest::Approx(2.0 + 6.0 + 4.0));
}

TEST_CASE("max_reach_right matches the worked values") {
    const Depot left{1, 18.0, 10.0};
    const auto t = max_reach_right(left, 0.0, 140.0, 156.0);
    REQUIRE(t);
    CHECK(*t == doctest::Approx(68.2113).epsilon(1e-4));
    CHECK(tour_length(left, {0.0, *t}) == doctest::Approx(140.0).epsilon(1e-9));
    // largest integer boundary a single tour still covers
    CHECK(tour_length(left, {0.0, 68.0}) <= 140.0 + kLengthTol);
    CHECK(tour_length(left, {0.0, 69.0}) > 140.0 + kLengthTol);

    CHECK(*max_reach_right({1, 0.0, 0.0}, 0.0, 10.0, 100.0) == doctest::Approx(5.0));
    CHECK(!max_reach_right({1, 0.0, 100.0}, 0.0, 50.0, 100.0));
}

TEST_CASE("max_reach_left mirrors max_reach_right") {
    const Depot right{3, 138.0, 10.0};
    const auto s = max_reach_left(right, 156.0, 140.0);
    REQUIRE(s);
    CHECK(*s == doctest::Approx(156.0 - 68.2113).epsilon(1e-4));

    CHECK(*max_reach_left({1, 0.0, 0.0}, 5.0, 10.0) == doctest::Approx(0.0));

    // covering all of [0, 68] from the left depot fits the budget
    const Depot left{1, 18.0, 10.0};
    const auto whole = max_reach_left(left, 68.0, 140.0);
    REQUIRE(whole);
    CHECK(*whole == doctest::Approx(0.0));
    CHECK(tour_length(left, {0.0, 68.0}) <= 140.0 + kLengthTol);
}

TEST_CASE("reach spans at unit granularity") {
    const auto origin = reach_span({1, 0.0, 0.0}, 10.0, 100);
    REQUIRE(origin);
    CHECK(origin->first == 0);
    CHECK(origin->last == 5);

    CHECK(!reach_span({1, 0.0, 100.0}, 50.0, 100));

    const auto middle = reach_span(kHighMiddle, 140.0, 156);
    REQUIRE(middle);
    CHECK(middle->first == 42);
    CHECK(middle->last == 114);
    // one unit further left just misses the budget
    CHECK(tour_length(kHighMiddle, {41.0, 42.0}) > 140.0 + kLengthTol);
    CHECK(tour_length(kHighMiddle, {42.0, 43.0}) <= 140.0 + kLengthTol);
}

TEST_CASE("mirror symmetry of tour lengths") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Depot depot{1, uniform(rng, -10, 110), uniform(rng, 0, 40)};
        const double a = uniform(rng, 0, 100);
        const double b = a + uniform(rng, 0, 30);
        const double axis = uniform(rng, -5, 105);
        const Depot reflected{1, 2 * axis - depot.x, depot.y};
        const double direct = tour_length(depot, {a, b});
        const double mirrored = tour_length(reflected, {2 * axis - b, 2 * axis - a});
        CHECK(direct == doctest::Approx(mirrored).epsilon(1e-9));
    }
}

TEST_CASE("tours pay for altitude and traversal") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const Depot depot{1, uniform(rng, -10, 110), uniform(rng, 0, 40)};
        const double a = uniform(rng, 0, 100);
        const double b = a + uniform(rng, 0, 30);
        CHECK(tour_length(depot, {a, b}) >= (b - a) + 2 * depot.y - 1e-12);
    }
}

TEST_CASE("reach boundary is budget-tight") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const Depot depot{1, uniform(rng, -10, 110), uniform(rng, 0.1, 40)};
        const double s = uniform(rng, 0, 100);
        const double q = 2 * barrier_distance(depot, s) * uniform(rng, 1.05, 1.8) + 1.0;
        const auto t = max_reach_right(depot, s, q, 1e9);
        REQUIRE(t);
        CHECK(tour_length(depot, {s, *t}) <= q + kLengthTol);
        CHECK(tour_length(depot, {s, *t + 1e-6}) > q - kLengthTol);
    }
}

TEST_CASE("closed form agrees with bisection on 1000 random triples") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 1000; ++i) {
        const Depot depot{1, uniform(rng, -20, 120), uniform(rng, 0.0, 30)};
        const double s = uniform(rng, 0, 100);
        const double base = 2 * barrier_distance(depot, s);
        const double q = base * uniform(rng, 1.0, 1.8) + uniform(rng, 0.01, 5.0);
        const auto fast = max_reach_right(depot, s, q, 1e9);
        const auto slow = oracle_max_reach(depot, s, q);
        REQUIRE(fast);
        REQUIRE(slow);
        CHECK(*fast == doctest::Approx(*slow).epsilon(1e-7));
    }
}

TEST_CASE("larger budgets never shrink the reach span") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const Depot depot{1, uniform(rng, -10, 60), uniform(rng, 0.2, 15)};
        const double q = uniform(rng, 1.0, 60.0);
        const auto narrow = reach_span(depot, q, 50);
        const auto wide = reach_span(depot, q + uniform(rng, 0.0, 20.0), 50);
        if (!narrow) continue;
        REQUIRE(wide);
        CHECK(wide->first <= narrow->first);
        CHECK(wide->last >= narrow->last);
    }
}
