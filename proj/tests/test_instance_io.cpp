#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <variant>

#include "brs/instance_io.hpp"
#include "brs/solver.hpp"
#include "fixtures.hpp"

using namespace brs;

namespace {

const char* kThreeDepotDoc = R"({
  "barrier_length": 156,
  "path_budget": 140,
  "max_drones": 3,
  "depots": [
    {"x": 78, "y": 59.16079783099616},
    {"x": 18, "y": 10},
    {"x": 138, "y": 10}
  ]
})";

}  // namespace

TEST_CASE("instances parse and sort depots by abscissa") {
    const auto inst = parse_instance(kThreeDepotDoc);
    CHECK(inst.barrier_length == 156);
    CHECK(inst.budget == 140.0);
    CHECK(*inst.max_drones == 3);
    REQUIRE(inst.depots.size() == 3);
    CHECK(inst.depots[0].x == 18.0);
    CHECK(inst.depots[1].x == 78.0);
    CHECK(inst.depots[2].x == 138.0);
    CHECK(inst.depots[0].index == 1);
    // the middle depot arrived first in the document
    CHECK(inst.input_order == std::vector<int>{1, 0, 2});
}

TEST_CASE("duplicate abscissas are rejected by rule") {
    const char* doc = R"({"barrier_length": 10, "path_budget": 8,
        "depots": [{"x": 3, "y": 1}, {"x": 3, "y": 2}]})";
    try {
        parse_instance(doc);
        FAIL("expected a parse rejection");
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find("pairwise distinct") != std::string::npos);
        CHECK(err.path().find("depots") != std::string::npos);
    }
}

TEST_CASE("structural rejections carry field paths") {
    CHECK_THROWS_WITH_AS(parse_instance(R"({"path_budget": 1, "depots": [{"x":0,"y":0}]})"),
                         doctest::Contains("barrier_length"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"barrier_length": 5, "path_budget": 1, "depots": []})"),
        doctest::Contains("depots"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance(
            R"({"barrier_length": 5, "path_budget": 1, "depots": [{"x": 1, "y": -2}]})"),
        doctest::Contains("depots[0].y"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"barrier_length": 5, "path_budget": -1, "depots": [{"x":1,"y":1}]})"),
        doctest::Contains("path_budget"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"barrier_length": 0, "path_budget": 1, "depots": [{"x":1,"y":1}]})"),
        doctest::Contains("barrier_length"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance(
            R"({"barrier_length": 5, "path_budget": 1, "max_drones": 0, "depots": [{"x":1,"y":1}]})"),
        doctest::Contains("max_drones"), ParseError);
    CHECK_THROWS_AS(parse_instance("not json"), ParseError);
}

TEST_CASE("instance writing round-trips exactly") {
    const auto inst = parse_instance(kThreeDepotDoc);
    const auto text = write_instance(inst);
    const auto again = parse_instance(text);
    CHECK(again.barrier_length == inst.barrier_length);
    CHECK(again.budget == inst.budget);
    REQUIRE(again.depots.size() == inst.depots.size());
    for (std::size_t i = 0; i < inst.depots.size(); ++i) {
        CHECK(again.depots[i].x == inst.depots[i].x);
        CHECK(again.depots[i].y == inst.depots[i].y);
    }
    CHECK(write_instance(again) == text);
}

TEST_CASE("solution documents are byte-stable and round-trip") {
    const auto inst = testing::three_depot_instance();
    const auto result = solve(inst);
    REQUIRE(std::holds_alternative<Solution>(result));

    const auto text = write_solution(result);
    CHECK(text == write_solution(result));

    const auto parsed = parse_solution(text);
    REQUIRE(std::holds_alternative<Solution>(parsed));
    CHECK(write_solution(parsed) == text);

    const auto& sol = std::get<Solution>(parsed);
    CHECK(sol.algorithm == Algorithm::A2);
    CHECK(sol.drones_used == 3);
    double total = 0.0;
    for (const auto& seg : sol.segments)
        for (const auto& tour : seg.tours) total += tour.length;
    CHECK(total == doctest::Approx(sol.objective).epsilon(1e-6));
}

TEST_CASE("infeasible runs serialize their diagnostics") {
    const SolveResult result = Infeasible{CoverageGap{0.0, 10.0}, 4, "barrier not coverable"};
    const auto text = write_solution(result);
    CHECK(text.find("\"feasible\": false") != std::string::npos);
    CHECK(text.find("\"n_min\": 4") != std::string::npos);
    CHECK(text.find("\"gap\"") != std::string::npos);
    const auto parsed = parse_solution(text);
    REQUIRE(std::holds_alternative<Infeasible>(parsed));
    CHECK(std::get<Infeasible>(parsed).n_min == 4);
}

TEST_CASE("table dumps carry exact headers and infeasible markers") {
    const auto inst = testing::three_depot_instance();
    const auto tables = build_tables(inst);
    const auto csv = dump_tables_csv(tables, 2);

    CHECK(csv.rfind("depot,a,b,n_i,f_i\n", 0) == 0);
    CHECK(csv.find("\n2,68,88,1,140.000000000\n") != std::string::npos);
    CHECK(csv.find("\n2,0,0,0,0.000000000\n") != std::string::npos);
    CHECK(csv.find("\n2,0,156,inf,inf\n") != std::string::npos);
    CHECK(csv.find("\n1,") == std::string::npos);  // filtered to depot 2
}

TEST_CASE("empty segments serialize with empty drone arrays") {
    Solution sol;
    sol.algorithm = Algorithm::A2;
    sol.objective = 0.0;
    sol.parts = 0;
    sol.drones_used = 0;
    sol.segments = {{1, 0, 0, 0, {}}};
    const auto text = write_solution(SolveResult{sol});
    CHECK(text.find("\"drones\": []") != std::string::npos);
}
