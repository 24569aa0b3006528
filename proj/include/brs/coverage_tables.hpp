#pragma once

#include <optional>
#include <span>
#include <vector>

#include "brs/geometry.hpp"

namespace brs {

// One drone trajectory: turn-left point, turn-right point, tour perimeter.
struct TourPiece {
    double start = 0.0;
    double end = 0.0;
    double length = 0.0;
};

// Minimum-cost construction for one depot covering an integer segment [a, b]
// with the minimum possible number of drones.
struct SegmentPlan {
    double cost = 0.0;
    int drones = 0;
    std::vector<TourPiece> pieces;
};

struct ChainBuildStats {
    long long right_evals = 0;  // closed-form reach evaluations, rightward pass
    long long left_evals = 0;   // same, mirrored pass
};

// Compact per-depot reachability chains.
//
// right[a][j] is the farthest barrier point that j+1 chained full-budget
// drones starting at integer a can reach; left[b][j] mirrors leftward from
// integer b. Chains stop once a further drone would cover less than one
// barrier unit (unless it reaches the barrier end), so their length is at
// most `cap`. They encode both the minimum drone count and the cheapest
// tour split for any integer segment.
struct DepotChains {
    Depot depot;
    double budget = 0.0;
    int barrier_length = 0;
    int cap = 0;
    std::vector<std::vector<double>> right;
    std::vector<std::vector<double>> left;
    ChainBuildStats stats;
};

DepotChains build_chains(const Depot& depot, double budget, int barrier_length, int cap);

// Minimum number of this depot's drones covering [a, b]; 0 for a == b,
// empty when the chain saturates or the cap is exceeded before b.
std::optional<int> min_drones(const DepotChains& chains, int a, int b);

// Minimum total tour length of exactly min_drones(a, b) drones covering
// [a, b]; 0 for the empty segment.
std::optional<double> segment_cost(const DepotChains& chains, int a, int b);

// Same construction, but materializes the individual drone tours.
std::optional<SegmentPlan> segment_plan(const DepotChains& chains, int a, int b);

// One-shot evaluation with no precomputed chains: walks the reach chain for
// this pair only. Used by the naive dense-table strategy and for
// reconstruction when only an aggregate table is at hand.
std::optional<double> segment_cost_fresh(const Depot& depot, double budget, int barrier_length,
                                         int cap, int a, int b);
std::optional<SegmentPlan> segment_plan_fresh(const Depot& depot, double budget,
                                              int barrier_length, int cap, int a, int b);

struct AggregateBest {
    double cost = 0.0;
    int depot_index = 0;  // 1-based; ties resolve to the smallest index
};

// Best depot for [a, b]; empty when every depot is infeasible for the pair.
std::optional<AggregateBest> aggregate(std::span<const DepotChains> tables, int a, int b);

// Query interface shared by the lazy (chain-backed) and dense table layouts,
// with a query counter for complexity accounting.
struct AggregateTable {
    AggregateTable() = default;
    AggregateTable(const AggregateTable&) = default;
    AggregateTable(AggregateTable&&) = default;
    AggregateTable& operator=(const AggregateTable&) = default;
    AggregateTable& operator=(AggregateTable&&) = default;
    virtual ~AggregateTable() = default;

    virtual std::optional<AggregateBest> best(int a, int b) const = 0;
    mutable long long queries = 0;
};

class LazyAggregate final : public AggregateTable {
  public:
    explicit LazyAggregate(std::span<const DepotChains> tables) : tables_(tables) {}
    std::optional<AggregateBest> best(int a, int b) const override {
        ++queries;
        return aggregate(tables_, a, b);
    }

  private:
    std::span<const DepotChains> tables_;
};

// Dense materialization of f(a, b) and k(a, b) over all integer pairs.
class DenseAggregate final : public AggregateTable {
  public:
    DenseAggregate(int barrier_length);
    std::optional<AggregateBest> best(int a, int b) const override;
    void set(int a, int b, double cost, int depot_index);
    int barrier_length() const { return length_; }

  private:
    int length_ = 0;
    std::vector<double> cost_;      // NaN marks an infeasible pair
    std::vector<int> depot_;
};

// Dense table filled from prebuilt chains (the compact route, materialized).
DenseAggregate densify(std::span<const DepotChains> tables);

// Dense table built by evaluating every pair from scratch, O(n) per pair.
DenseAggregate build_dense_naive(std::span<const Depot> depots, double budget,
                                 int barrier_length, int cap);

}  // namespace brs
