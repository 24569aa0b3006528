#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "brs/coverage_tables.hpp"
#include "brs/geometry.hpp"

namespace brs {

struct Instance {
    int barrier_length = 0;          // L
    double budget = 0.0;             // q, per-drone tour limit
    std::optional<int> max_drones;   // n, absent = unconstrained
    std::vector<Depot> depots;       // sorted by abscissa, index = 1..m
    std::vector<int> input_order;    // original position of each sorted depot

    // A drone covers at least one barrier unit, so chains never need more
    // than min(n, L) links.
    int chain_cap() const {
        return max_drones ? std::min(*max_drones, barrier_length) : barrier_length;
    }
};

enum class Algorithm { A1, A2 };

struct SegmentAssignment {
    int depot_index = 0;  // 1-based
    int a = 0;
    int b = 0;
    int drones = 0;
    std::vector<TourPiece> tours;
};

struct Solution {
    Algorithm algorithm = Algorithm::A1;
    double objective = 0.0;
    int parts = 0;        // non-empty segments
    int drones_used = 0;  // n* (A1) or N* (A2)
    std::vector<SegmentAssignment> segments;
    std::optional<int> n_min;
    std::optional<int> n_star;
};

struct CoverageGap {
    double from = 0.0;
    double to = 0.0;
};

struct Infeasible {
    std::optional<CoverageGap> gap;
    std::optional<int> n_min;
    std::string reason;
};

using SolveResult = std::variant<Solution, Infeasible>;

struct FeasibilityReport {
    bool coverable = false;
    std::optional<int> n_min;
    std::optional<CoverageGap> gap;
};

struct SolveStats {
    long long table_queries = 0;
};

// Coverability screen: the union of unit-level reach spans must contain the
// whole barrier, and the greedy farthest-reach sweep must finish. The sweep
// count is the minimum number of drones in any cover.
FeasibilityReport feasibility_check(const Instance& inst);

// Chain tables for every depot; built in parallel (BRS_THREADS caps fan-out).
std::vector<DepotChains> build_tables(const Instance& inst);

// Optimal partition of [0, L] with an unconstrained drone count.
SolveResult solve_a1(const Instance& inst, std::span<const DepotChains> tables,
                     SolveStats* stats = nullptr);

// Generic-table variant used by the benchmark strategies; reconstruction
// recomputes per-segment plans from scratch.
SolveResult solve_a1_over(const Instance& inst, const AggregateTable& table,
                          SolveStats* stats = nullptr);

// Two-parameter recursion over (depot prefix, right boundary, drone budget).
SolveResult solve_a2(const Instance& inst, std::span<const DepotChains> tables, int cap,
                     SolveStats* stats = nullptr);

// Feasibility screen, then A1; falls back to A2 when A1 spends more drones
// than the instance allows.
SolveResult solve(const Instance& inst);

// Drone tours realizing the minimum-cost cover of [a, b] by one depot.
std::vector<TourPiece> extract_tours(const DepotChains& chains, int a, int b);

}  // namespace brs
