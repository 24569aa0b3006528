#pragma once

#include <optional>

namespace brs {

// Absolute tolerance for all length comparisons (budgets, chain boundaries).
inline constexpr double kLengthTol = 1e-9;

// A depot is a point at or above the barrier line (the x axis).
// Within an instance depots are numbered 1..m from left to right.
struct Depot {
    int index = 0;
    double x = 0.0;
    double y = 0.0;
};

// Closed sub-interval [a, b] of the barrier [0, L]; a == b is the empty segment.
struct BarrierSegment {
    double a = 0.0;
    double b = 0.0;

    double length() const { return b - a; }
    bool empty() const { return b - a <= kLengthTol; }
};

// Extreme unit segments a depot can serve on its own budget: the leftmost
// coverable unit starts at `first`, the rightmost ends at `last`.
struct ReachSpan {
    int first = 0;
    int last = 0;
};

// Distance from the depot to the barrier point (u, 0).
double barrier_distance(const Depot& depot, double u);

// Perimeter of the triangular tour depot -> (a,0) -> (b,0) -> depot.
// Degenerates to an out-and-back trip when a == b.
double tour_length(const Depot& depot, const BarrierSegment& seg);

// Largest t <= barrier_length such that tour_length(depot, {start, t}) stays
// within budget. Empty when the depot cannot even touch `start`.
std::optional<double> max_reach_right(const Depot& depot, double start, double budget,
                                      double barrier_length);

// Mirror image: smallest s >= 0 such that tour_length(depot, {s, end}) stays
// within budget. Empty when the depot cannot touch `end`.
std::optional<double> max_reach_left(const Depot& depot, double end, double budget);

// Unit-segment reach limits at integer granularity; empty when no unit
// segment fits the budget.
std::optional<ReachSpan> reach_span(const Depot& depot, double budget, int barrier_length);

}  // namespace brs
