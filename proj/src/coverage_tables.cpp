#include "brs/coverage_tables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace brs {

namespace {

double tour(const Depot& depot, double s, double t) {
    return tour_length(depot, {s, t});
}

// Full-budget drones laid end to end from `from` toward `end_limit`.
// A link is kept only if it advances by at least one barrier unit or lands
// on the barrier end; anything shorter cannot carry a usable drone.
// Writes into `scratch` (reserved once by the caller) to keep builds cheap.
void chain_rightward(const Depot& depot, double budget, double end_limit, double from, int cap,
                     long long& evals, std::vector<double>& scratch) {
    scratch.clear();
    double at = from;
    while (int(scratch.size()) < cap) {
        ++evals;
        const auto t = max_reach_right(depot, at, budget, end_limit);
        if (!t) break;
        const bool at_end = *t >= end_limit - kLengthTol;
        if (*t - at < 1.0 - kLengthTol && !at_end) break;
        scratch.push_back(*t);
        if (at_end) break;
        at = *t;
    }
}

struct PlanRequest {
    const Depot& depot;
    double budget;
    int a;
    int b;
    int k;
    std::span<const double> right_links;  // chained from a
    std::span<const double> left_links;   // chained from b, decreasing
};

void push_piece(std::vector<TourPiece>* pieces, const Depot& depot, double s, double t) {
    if (pieces) pieces->push_back({s, t, tour(depot, s, t)});
}

// Depot outside the segment: k-1 full-budget drones chain in from the far
// end, a single leftover drone covers the near part next to the depot.
std::optional<double> plan_outer(const PlanRequest& rq, bool depot_left,
                                 std::vector<TourPiece>* pieces) {
    const int fulls = rq.k - 1;
    const auto& links = depot_left ? rq.left_links : rq.right_links;
    if (int(links.size()) < fulls) return std::nullopt;
    const double h = links[fulls - 1];
    double cost = 0.0;
    if (depot_left) {
        if (h < rq.a - kLengthTol) return std::nullopt;
        const double remnant = tour(rq.depot, rq.a, h);
        if (remnant > rq.budget + kLengthTol) return std::nullopt;
        cost += remnant;
        push_piece(pieces, rq.depot, rq.a, h);
        for (int i = fulls - 1; i >= 1; --i) {
            cost += tour(rq.depot, links[i], links[i - 1]);
            push_piece(pieces, rq.depot, links[i], links[i - 1]);
        }
        cost += tour(rq.depot, links[0], rq.b);
        push_piece(pieces, rq.depot, links[0], rq.b);
    } else {
        if (h > rq.b + kLengthTol) return std::nullopt;
        const double remnant = tour(rq.depot, h, rq.b);
        if (remnant > rq.budget + kLengthTol) return std::nullopt;
        cost += tour(rq.depot, rq.a, links[0]);
        push_piece(pieces, rq.depot, rq.a, links[0]);
        for (int i = 1; i < fulls; ++i) {
            cost += tour(rq.depot, links[i - 1], links[i]);
            push_piece(pieces, rq.depot, links[i - 1], links[i]);
        }
        cost += remnant;
        push_piece(pieces, rq.depot, h, rq.b);
    }
    return cost;
}

// Depot foot inside (a, b): j full-budget drones chain right from a,
// k-2-j chain left from b, and two drones share the middle with the hinge
// h as close to the perpendicular foot as budgets allow.
std::optional<double> case_inner_candidate(const PlanRequest& rq, int j, double* h_out) {
    const int left_fulls = rq.k - 2 - j;
    if (int(rq.right_links.size()) < j) return std::nullopt;
    if (int(rq.left_links.size()) < left_fulls) return std::nullopt;
    const double c = j > 0 ? rq.right_links[j - 1] : double(rq.a);
    const double d = left_fulls > 0 ? rq.left_links[left_fulls - 1] : double(rq.b);
    if (c > d + kLengthTol) return std::nullopt;

    const double q = rq.budget;
    double h = std::clamp(rq.depot.x, c, d);
    double t_left = tour(rq.depot, c, h);
    double t_right = tour(rq.depot, h, d);
    if (t_left > q + kLengthTol && t_right > q + kLengthTol) return std::nullopt;
    if (t_right > q + kLengthTol) {
        const auto hh = max_reach_left(rq.depot, d, q);
        if (!hh || *hh < c - kLengthTol) return std::nullopt;
        h = std::min(*hh, d);
        t_left = tour(rq.depot, c, h);
        t_right = tour(rq.depot, h, d);
    } else if (t_left > q + kLengthTol) {
        const auto hh = max_reach_right(rq.depot, c, q, d);
        if (!hh) return std::nullopt;
        h = *hh;
        t_left = tour(rq.depot, c, h);
        t_right = tour(rq.depot, h, d);
    }
    if (t_left > q + kLengthTol || t_right > q + kLengthTol) return std::nullopt;

    double cost = t_left + t_right;
    double prev = rq.a;
    for (int i = 0; i < j; ++i) {
        cost += tour(rq.depot, prev, rq.right_links[i]);
        prev = rq.right_links[i];
    }
    prev = rq.b;
    for (int i = 0; i < left_fulls; ++i) {
        cost += tour(rq.depot, rq.left_links[i], prev);
        prev = rq.left_links[i];
    }
    *h_out = h;
    return cost;
}

void assemble_inner(const PlanRequest& rq, int j, double h, std::vector<TourPiece>* pieces) {
    const int left_fulls = rq.k - 2 - j;
    const double c = j > 0 ? rq.right_links[j - 1] : double(rq.a);
    const double d = left_fulls > 0 ? rq.left_links[left_fulls - 1] : double(rq.b);
    double prev = rq.a;
    for (int i = 0; i < j; ++i) {
        push_piece(pieces, rq.depot, prev, rq.right_links[i]);
        prev = rq.right_links[i];
    }
    push_piece(pieces, rq.depot, c, h);
    push_piece(pieces, rq.depot, h, d);
    for (int i = left_fulls - 1; i >= 1; --i)
        push_piece(pieces, rq.depot, rq.left_links[i], rq.left_links[i - 1]);
    if (left_fulls > 0) push_piece(pieces, rq.depot, rq.left_links[0], rq.b);
}

std::optional<double> plan_core(const PlanRequest& rq, std::vector<TourPiece>* pieces) {
    if (pieces) pieces->clear();
    if (rq.k == 0) return 0.0;
    if (rq.k == 1) {
        const double t = tour(rq.depot, rq.a, rq.b);
        if (t > rq.budget + kLengthTol) return std::nullopt;
        push_piece(pieces, rq.depot, rq.a, rq.b);
        return t;
    }
    if (rq.depot.x <= rq.a) return plan_outer(rq, /*depot_left=*/true, pieces);
    if (rq.depot.x >= rq.b) return plan_outer(rq, /*depot_left=*/false, pieces);

    double best = std::numeric_limits<double>::infinity();
    int best_j = -1;
    double best_h = 0.0;
    for (int j = 0; j <= rq.k - 2; ++j) {
        double h = 0.0;
        const auto cand = case_inner_candidate(rq, j, &h);
        if (cand && *cand < best) {
            best = *cand;
            best_j = j;
            best_h = h;
        }
    }
    if (best_j < 0) return std::nullopt;
    if (pieces) assemble_inner(rq, best_j, best_h, pieces);
    return best;
}

std::optional<double> plan_from_chains(const DepotChains& ch, int a, int b,
                                       std::vector<TourPiece>* pieces) {
    const auto k = min_drones(ch, a, b);
    if (!k) return std::nullopt;
    const PlanRequest rq{ch.depot, ch.budget, a, b, *k,
                         std::span<const double>(ch.right[a]),
                         std::span<const double>(ch.left[b])};
    return plan_core(rq, pieces);
}

std::optional<double> plan_fresh(const Depot& depot, double budget, int barrier_length, int cap,
                                 int a, int b, std::vector<TourPiece>* pieces) {
    if (a < 0 || b > barrier_length || a > b) throw std::out_of_range("segment out of range");
    if (a == b) {
        if (pieces) pieces->clear();
        return 0.0;
    }
    std::vector<double> right;
    double at = a;
    int k = -1;
    while (int(right.size()) < cap) {
        const auto t = max_reach_right(depot, at, budget, barrier_length);
        if (!t) break;
        const bool at_end = *t >= barrier_length - kLengthTol;
        if (*t - at < 1.0 - kLengthTol && !at_end) break;
        right.push_back(*t);
        if (*t >= double(b) - kLengthTol) {
            k = int(right.size());
            break;
        }
        if (at_end) break;
        at = *t;
    }
    if (k < 0) return std::nullopt;

    std::vector<double> left;
    const Depot mirrored{depot.index, -depot.x, depot.y};
    double from = -double(b);
    while (int(left.size()) + 1 < k) {
        const auto t = max_reach_right(mirrored, from, budget, 0.0);
        if (!t) break;
        const bool at_end = *t >= -kLengthTol;
        if (*t - from < 1.0 - kLengthTol && !at_end) break;
        left.push_back(-*t);
        if (at_end) break;
        from = *t;
    }
    const PlanRequest rq{depot, budget, a, b, k, right, left};
    return plan_core(rq, pieces);
}

}  // namespace

DepotChains build_chains(const Depot& depot, double budget, int barrier_length, int cap) {
    if (barrier_length < 1 || cap < 1) throw std::invalid_argument("build_chains: bad arguments");
    DepotChains out;
    out.depot = depot;
    out.budget = budget;
    out.barrier_length = barrier_length;
    out.cap = cap;
    out.right.resize(barrier_length + 1);
    out.left.resize(barrier_length + 1);
    std::vector<double> scratch;
    scratch.reserve(cap);
    for (int a = 0; a <= barrier_length; ++a) {
        chain_rightward(depot, budget, barrier_length, a, cap, out.stats.right_evals, scratch);
        out.right[a].assign(scratch.begin(), scratch.end());
    }
    const Depot mirrored{depot.index, -depot.x, depot.y};
    for (int b = 0; b <= barrier_length; ++b) {
        chain_rightward(mirrored, budget, 0.0, -double(b), cap, out.stats.left_evals, scratch);
        for (double& v : scratch) v = -v;
        out.left[b].assign(scratch.begin(), scratch.end());
    }
    return out;
}

std::optional<int> min_drones(const DepotChains& chains, int a, int b) {
    if (a < 0 || b > chains.barrier_length || a > b)
        throw std::out_of_range("min_drones: segment out of range");
    if (a == b) return 0;
    const auto& chain = chains.right[a];
    const auto it = std::lower_bound(chain.begin(), chain.end(), double(b) - kLengthTol);
    if (it == chain.end()) return std::nullopt;
    return int(it - chain.begin()) + 1;
}

std::optional<double> segment_cost(const DepotChains& chains, int a, int b) {
    return plan_from_chains(chains, a, b, nullptr);
}

std::optional<SegmentPlan> segment_plan(const DepotChains& chains, int a, int b) {
    SegmentPlan plan;
    const auto cost = plan_from_chains(chains, a, b, &plan.pieces);
    if (!cost) return std::nullopt;
    plan.cost = *cost;
    plan.drones = int(plan.pieces.size());
    return plan;
}

std::optional<double> segment_cost_fresh(const Depot& depot, double budget, int barrier_length,
                                         int cap, int a, int b) {
    return plan_fresh(depot, budget, barrier_length, cap, a, b, nullptr);
}

std::optional<SegmentPlan> segment_plan_fresh(const Depot& depot, double budget,
                                              int barrier_length, int cap, int a, int b) {
    SegmentPlan plan;
    const auto cost = plan_fresh(depot, budget, barrier_length, cap, a, b, &plan.pieces);
    if (!cost) return std::nullopt;
    plan.cost = *cost;
    plan.drones = int(plan.pieces.size());
    return plan;
}

std::optional<AggregateBest> aggregate(std::span<const DepotChains> tables, int a, int b) {
    std::optional<AggregateBest> best;
    for (const auto& ch : tables) {
        const auto c = segment_cost(ch, a, b);
        if (!c) continue;
        // ties within tolerance resolve to the smallest depot index
        if (!best || *c < best->cost - kLengthTol) best = AggregateBest{*c, ch.depot.index};
    }
    return best;
}

DenseAggregate::DenseAggregate(int barrier_length)
    : length_(barrier_length),
      cost_(std::size_t(barrier_length + 1) * std::size_t(barrier_length + 1),
            std::numeric_limits<double>::quiet_NaN()),
      depot_(std::size_t(barrier_length + 1) * std::size_t(barrier_length + 1), 0) {}

std::optional<AggregateBest> DenseAggregate::best(int a, int b) const {
    ++queries;
    const std::size_t i = std::size_t(a) * std::size_t(length_ + 1) + std::size_t(b);
    if (std::isnan(cost_[i])) return std::nullopt;
    return AggregateBest{cost_[i], depot_[i]};
}

void DenseAggregate::set(int a, int b, double cost, int depot_index) {
    const std::size_t i = std::size_t(a) * std::size_t(length_ + 1) + std::size_t(b);
    cost_[i] = cost;
    depot_[i] = depot_index;
}

DenseAggregate densify(std::span<const DepotChains> tables) {
    const int length = tables.empty() ? 0 : tables.front().barrier_length;
    DenseAggregate dense(length);
    for (int a = 0; a <= length; ++a)
        for (int b = a; b <= length; ++b)
            if (const auto best = aggregate(tables, a, b)) dense.set(a, b, best->cost, best->depot_index);
    return dense;
}

DenseAggregate build_dense_naive(std::span<const Depot> depots, double budget,
                                 int barrier_length, int cap) {
    DenseAggregate dense(barrier_length);
    for (int a = 0; a <= barrier_length; ++a) {
        for (int b = a; b <= barrier_length; ++b) {
            double best = std::numeric_limits<double>::infinity();
            int who = 0;
            for (const auto& depot : depots) {
                const auto c = segment_cost_fresh(depot, budget, barrier_length, cap, a, b);
                if (c && (who == 0 || *c < best - kLengthTol)) {
                    best = *c;
                    who = depot.index;
                }
            }
            if (who != 0) dense.set(a, b, best, who);
        }
    }
    return dense;
}

}  // namespace brs
