#pragma once

#include <optional>
#include <vector>

#include "brs/solver.hpp"

namespace brs {

// Brute-force reference results, produced without chains, closed forms or
// Bellman tables so they can arbitrate the fast paths.
struct OracleResult {
    double objective = 0.0;
    std::vector<int> partition;     // 0 = z0 < z1 < ... = L
    std::vector<int> part_depots;   // depot per part, 1-based
    std::vector<int> part_drones;   // drone count per part
    long long states_visited = 0;
};

// sup{ t : tour_length(depot, [start, t]) <= budget } by plain bisection.
std::optional<double> oracle_max_reach(const Depot& depot, double start, double budget);

// Minimum drone count for [a, b] by greedy bisected reach steps, mirroring
// the unit-progress rule of the fast tables.
std::optional<int> oracle_min_drones(const Depot& depot, double budget, double barrier_length,
                                     int a, int b, int cap);

// Cheapest way for exactly k of this depot's drones to cover [a, b]:
// exhaustive search over split points drawn from the step grid, the
// budget-saturated chain points (bisected) and the perpendicular foot.
std::optional<double> oracle_segment_cost(const Depot& depot, double budget, int a, int b, int k,
                                          double step = 1.0);

// Global optimum by enumerating every integer partition of [0, L] together
// with every depot assignment, pruned only by cost bounds. Guarded to
// barriers of length at most 24.
std::optional<OracleResult> oracle_optimum(const Instance& inst,
                                          std::optional<int> cap = std::nullopt,
                                          double step = 1.0);

}  // namespace brs
