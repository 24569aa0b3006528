#include "brs/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace brs {

namespace {

// sup { t : tour_length(depot, [start, t]) <= budget } by predicate bisection.
// Handles the degenerate regime where the closed form divides by ~zero
// (on-barrier depots whose budget is exactly exhausted by reaching `start`).
double reach_by_bisection(const Depot& depot, double start, double budget) {
    double lo = start;
    double hi = start + budget + 1.0;  // a tour is at least as long as its segment
    while (hi - lo > 1e-12 * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (tour_length(depot, {start, mid}) <= budget + kLengthTol)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

double barrier_distance(const Depot& depot, double u) {
    return std::hypot(depot.x - u, depot.y);
}

double tour_length(const Depot& depot, const BarrierSegment& seg) {
    return barrier_distance(depot, seg.a) + (seg.b - seg.a) + barrier_distance(depot, seg.b);
}

std::optional<double> max_reach_right(const Depot& depot, double start, double budget,
                                      double barrier_length) {
    const double d_start = barrier_distance(depot, start);
    if (2.0 * d_start > budget + kLengthTol) return std::nullopt;

    // Solve dist(depot,(t,0)) = K - t with K = budget - d_start + start.
    const double k = budget - d_start + start;
    double t;
    if (k - depot.x <= 1e-9) {
        t = reach_by_bisection(depot, start, budget);
    } else {
        t = (k * k - depot.x * depot.x - depot.y * depot.y) / (2.0 * (k - depot.x));
        // One Newton step on the budget equation absorbs the rounding of K^2.
        const double r = std::hypot(t - depot.x, depot.y);
        const double deriv = 1.0 + (r > 0.0 ? (t - depot.x) / r : 0.0);
        if (deriv > 1e-12) t -= (d_start + (t - start) + r - budget) / deriv;
    }
    return std::clamp(t, start, barrier_length);
}

std::optional<double> max_reach_left(const Depot& depot, double end, double budget) {
    // Reflect across the ordinate axis and reuse the rightward construction;
    // the mirrored barrier ends at 0, which clamps the result at s >= 0.
    const Depot mirrored{depot.index, -depot.x, depot.y};
    const auto t = max_reach_right(mirrored, -end, budget, 0.0);
    if (!t) return std::nullopt;
    return -*t;
}

std::optional<ReachSpan> reach_span(const Depot& depot, double budget, int barrier_length) {
    int first = -1;
    for (int a = 0; a < barrier_length; ++a) {
        if (tour_length(depot, {double(a), double(a + 1)}) <= budget + kLengthTol) {
            first = a;
            break;
        }
    }
    if (first < 0) return std::nullopt;
    int last = first + 1;
    for (int b = barrier_length; b >= 1; --b) {
        if (tour_length(depot, {double(b - 1), double(b)}) <= budget + kLengthTol) {
            last = b;
            break;
        }
    }
    return ReachSpan{first, last};
}

}  // namespace brs
