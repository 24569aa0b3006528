#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "brs/coverage_tables.hpp"
#include "brs/generator.hpp"
#include "brs/oracle.hpp"
#include "fixtures.hpp"

using namespace brs;

TEST_CASE("chains from the left depot") {
    const Depot depot{1, 18.0, 10.0};
    const auto chains = build_chains(depot, 140.0, 156, 4);

    REQUIRE(chains.right[0].size() == 2);  // a third drone would gain under one unit
    CHECK(chains.right[0][0] == doctest::Approx(68.2113).epsilon(1e-4));
    CHECK(chains.right[0][1] == doctest::Approx(87.1470).epsilon(1e-4));
    CHECK(tour_length(depot, {0.0, chains.right[0][0]}) == doctest::Approx(140.0).epsilon(1e-9));
    CHECK(tour_length(depot, {chains.right[0][0], chains.right[0][1]}) ==
          doctest::Approx(140.0).epsilon(1e-9));
}

TEST_CASE("chain saturates when upkeep eats the whole budget") {
    const auto chains = build_chains({1, 0.0, 0.0}, 10.0, 100, 5);
    REQUIRE(chains.right[0].size() == 1);
    CHECK(chains.right[0][0] == doctest::Approx(5.0));
}

TEST_CASE("high middle depot covers [68, 88] on exactly one full budget") {
    const auto chains = build_chains({2, 78.0, 10.0 * std::sqrt(35.0)}, 140.0, 156, 3);
    REQUIRE(!chains.right[68].empty());
    CHECK(chains.right[68][0] == doctest::Approx(88.0).epsilon(1e-10));
    CHECK(*min_drones(chains, 68, 88) == 1);
    CHECK(*segment_cost(chains, 68, 88) == doctest::Approx(140.0).epsilon(1e-9));
}

TEST_CASE("minimum drone counts for the left depot") {
    const auto chains = build_chains({1, 18.0, 10.0}, 140.0, 156, 3);
    CHECK(*min_drones(chains, 0, 68) == 1);
    CHECK(*min_drones(chains, 0, 78) == 2);
    CHECK(*min_drones(chains, 0, 87) == 2);
    CHECK(!min_drones(chains, 0, 88));  // two full budgets stop at ~87.15
    CHECK(*min_drones(chains, 10, 10) == 0);
}

TEST_CASE("split at the perpendicular foot") {
    const auto chains = build_chains({1, 18.0, 10.0}, 140.0, 156, 3);
    const auto cost = segment_cost(chains, 0, 78);
    REQUIRE(cost);
    CHECK(*cost == doctest::Approx(testing::split_cost_at_foot()).epsilon(1e-9));

    const auto plan = segment_plan(chains, 0, 78);
    REQUIRE(plan);
    REQUIRE(plan->drones == 2);
    CHECK(plan->pieces[0].start == doctest::Approx(0.0));
    CHECK(plan->pieces[0].end == doctest::Approx(18.0));
    CHECK(plan->pieces[1].end == doctest::Approx(78.0));
}

TEST_CASE("empty segments cost nothing") {
    const auto chains = build_chains({1, 18.0, 10.0}, 140.0, 156, 3);
    CHECK(*segment_cost(chains, 42, 42) == 0.0);
    CHECK(segment_plan(chains, 42, 42)->pieces.empty());
}

TEST_CASE("aggregate picks the only feasible depot for [68, 88]") {
    const auto inst = testing::three_depot_instance();
    std::vector<DepotChains> tables;
    for (const auto& depot : inst.depots)
        tables.push_back(build_chains(depot, inst.budget, inst.barrier_length, 3));

    CHECK(!min_drones(tables[0], 68, 88));
    CHECK(!min_drones(tables[2], 68, 88));
    const auto best = aggregate(tables, 68, 88);
    REQUIRE(best);
    CHECK(best->depot_index == 2);
    CHECK(best->cost == doctest::Approx(140.0).epsilon(1e-9));

    // empty segments tie toward the smallest depot index
    const auto empty = aggregate(tables, 31, 31);
    REQUIRE(empty);
    CHECK(empty->depot_index == 1);
    CHECK(empty->cost == 0.0);
}

TEST_CASE("single-depot aggregate is the depot's own cost") {
    const auto chains = build_chains({1, 5.0, 2.0}, 30.0, 20, 10);
    std::vector<DepotChains> one{chains};
    for (int a = 0; a <= 20; ++a)
        for (int b = a; b <= 20; ++b) {
            const auto lone = aggregate(one, a, b);
            const auto direct = segment_cost(chains, a, b);
            CHECK(bool(lone) == bool(direct));
            if (lone) CHECK(lone->cost == *direct);
        }
}

TEST_CASE("costs and counts grow with the segment") {
    const auto inst = generate_instance(21, {18, 2, std::nullopt, 0.4, 0.3, 64});
    const auto tables = build_tables(inst);
    for (const auto& chains : tables) {
        for (int a = 0; a <= inst.barrier_length; ++a) {
            for (int b = a; b <= inst.barrier_length; ++b) {
                const auto k = min_drones(chains, a, b);
                const auto cost = segment_cost(chains, a, b);
                if (!k) continue;
                // widen each side by one unit
                if (a > 0) {
                    const auto wider = min_drones(chains, a - 1, b);
                    if (wider) {
                        CHECK(*wider >= *k);
                        CHECK(*segment_cost(chains, a - 1, b) >= *cost - 1e-9);
                    }
                }
                if (b < inst.barrier_length) {
                    const auto wider = min_drones(chains, a, b + 1);
                    if (wider) {
                        CHECK(*wider >= *k);
                        CHECK(*segment_cost(chains, a, b + 1) >= *cost - 1e-9);
                    }
                }
                // count/cost bracketing
                CHECK(*cost <= *k * inst.budget + 1e-9);
                CHECK(*cost >= (b - a) + 2.0 * chains.depot.y * *k - 1e-6);
            }
        }
    }
}

TEST_CASE("every planned tour respects the budget") {
    const auto inst = generate_instance(22, {16, 3, std::nullopt, 0.4, 0.3, 64});
    const auto tables = build_tables(inst);
    for (const auto& chains : tables)
        for (int a = 0; a <= inst.barrier_length; ++a)
            for (int b = a; b <= inst.barrier_length; ++b) {
                const auto plan = segment_plan(chains, a, b);
                if (!plan) continue;
                double sum = 0.0;
                double at = a;
                for (const auto& piece : plan->pieces) {
                    CHECK(piece.length <= inst.budget + kLengthTol);
                    CHECK(piece.start == doctest::Approx(at).epsilon(1e-9));
                    sum += piece.length;
                    at = piece.end;
                }
                if (b > a) CHECK(at == doctest::Approx(double(b)).epsilon(1e-9));
                CHECK(sum == doctest::Approx(plan->cost).epsilon(1e-9));
            }
}

TEST_CASE("chain building stays within the evaluation budget") {
    const int length = 200;
    const int cap = 16;
    const auto chains = build_chains({1, 60.0, 4.0}, 55.0, length, cap);
    CHECK(chains.stats.right_evals <= (long long)(cap) * (length + 1));
    CHECK(chains.stats.left_evals <= (long long)(cap) * (length + 1));
}

TEST_CASE("fresh evaluation matches the chain-backed tables bit for bit") {
    const auto inst = generate_instance(23, {14, 2, 6, 0.4, 0.3, 64});
    const auto tables = build_tables(inst);
    for (const auto& chains : tables)
        for (int a = 0; a <= inst.barrier_length; ++a)
            for (int b = a; b <= inst.barrier_length; ++b) {
                const auto stored = segment_cost(chains, a, b);
                const auto fresh = segment_cost_fresh(chains.depot, inst.budget,
                                                      inst.barrier_length, inst.chain_cap(), a, b);
                REQUIRE(bool(stored) == bool(fresh));
                if (stored) CHECK(*stored == *fresh);
            }
}

TEST_CASE("segment costs agree with the exhaustive reference") {
    for (const std::uint64_t seed : {31, 32, 33}) {
        const auto inst = generate_instance(seed, {12, 2, std::nullopt, 0.4, 0.35, 64});
        const auto tables = build_tables(inst);
        for (const auto& chains : tables) {
            for (int a = 0; a <= inst.barrier_length; ++a) {
                for (int b = a; b <= inst.barrier_length; ++b) {
                    const auto k = min_drones(chains, a, b);
                    if (!k || *k == 0) continue;
                    const auto mine = segment_cost(chains, a, b);
                    const auto ref =
                        oracle_segment_cost(chains.depot, inst.budget, a, b, *k);
                    REQUIRE(mine);
                    REQUIRE(ref);
                    CHECK(*mine == doctest::Approx(*ref).epsilon(1e-6));
                }
            }
        }
    }
}
