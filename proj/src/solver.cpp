#include "brs/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "brs/parallel.hpp"

namespace brs {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool finite(double v) { return !std::isnan(v); }

// Resume point of coverage after a sweep stall at c, at unit granularity.
double coverage_resume(const Instance& inst, double c) {
    double resume = inst.barrier_length;
    for (const auto& depot : inst.depots) {
        const auto span = reach_span(depot, inst.budget, inst.barrier_length);
        if (span && span->first >= c && span->first < resume) resume = span->first;
    }
    return resume;
}

Solution assemble_solution(Algorithm algo, double objective,
                           std::vector<SegmentAssignment> segments) {
    Solution sol;
    sol.algorithm = algo;
    sol.objective = objective;
    sol.segments = std::move(segments);
    for (const auto& seg : sol.segments) {
        sol.drones_used += seg.drones;
        if (seg.b > seg.a) ++sol.parts;
    }
    return sol;
}

}  // namespace

FeasibilityReport feasibility_check(const Instance& inst) {
    const int length = inst.barrier_length;

    // Every barrier unit must lie inside some depot's reach span.
    std::vector<std::optional<ReachSpan>> spans;
    spans.reserve(inst.depots.size());
    for (const auto& depot : inst.depots)
        spans.push_back(reach_span(depot, inst.budget, length));
    for (int u = 0; u < length; ++u) {
        bool covered = false;
        for (const auto& span : spans)
            if (span && span->first <= u && u + 1 <= span->last) {
                covered = true;
                break;
            }
        if (!covered)
            return {false, std::nullopt, CoverageGap{double(u), double(u + 1)}};
    }

    // Greedy farthest-reach sweep. Inside the last unit the drone may start
    // at L-1 and overlap already-covered ground, so the sweep never asks for
    // a reach from beyond L-1.
    double c = 0.0;
    int count = 0;
    while (c < length - kLengthTol) {
        const double start = std::min(c, double(length - 1));
        double best = c;
        for (const auto& depot : inst.depots) {
            const auto t = max_reach_right(depot, start, inst.budget, length);
            if (t && *t > best) best = *t;
        }
        if (best < start + 1.0 - kLengthTol)
            return {false, std::nullopt, CoverageGap{c, coverage_resume(inst, c)}};
        ++count;
        c = best;
    }
    return {true, count, std::nullopt};
}

std::vector<DepotChains> build_tables(const Instance& inst) {
    std::vector<DepotChains> tables(inst.depots.size());
    parallel_for(inst.depots.size(), [&](std::size_t i) {
        tables[i] =
            build_chains(inst.depots[i], inst.budget, inst.barrier_length, inst.chain_cap());
    });
    return tables;
}

namespace {

SolveResult run_a1(const Instance& inst, const AggregateTable& table,
                   const std::function<std::optional<SegmentPlan>(int, int, int)>& plan,
                   SolveStats* stats) {
    const int length = inst.barrier_length;
    std::vector<double> best(length + 1, kNan);
    std::vector<int> last_cut(length + 1, -1);
    std::vector<int> winner(length + 1, 0);
    best[0] = 0.0;

    for (int l = 1; l <= length; ++l) {
        for (int z = 0; z < l; ++z) {
            if (!finite(best[z])) continue;
            const auto q = table.best(z, l);
            if (!q) continue;
            const double cand = best[z] + q->cost;
            // Improvements within tolerance are ties; the earliest cut stays,
            // which also keeps one depot from being split across two cuts.
            if (!finite(best[l]) || cand < best[l] - kLengthTol) {
                best[l] = cand;
                last_cut[l] = z;
                winner[l] = q->depot_index;
            }
        }
    }
    if (!finite(best[length])) {
        if (stats) stats->table_queries = table.queries;
        return Infeasible{std::nullopt, std::nullopt,
                          "no feasible partition chain on the integer grid"};
    }

    // Bellman self-check on the stored forward tables.
    for (int l = 1; l <= length; ++l) {
        if (!finite(best[l])) continue;
        const int z = last_cut[l];
        const auto q = table.best(z, l);
        if (!q || best[l] != best[z] + q->cost)
            throw std::logic_error("forward recursion tables are inconsistent");
    }
    if (stats) stats->table_queries = table.queries;

    std::vector<SegmentAssignment> segments;
    int l = length;
    while (l > 0) {
        const int z = last_cut[l];
        const auto seg_plan = plan(winner[l], z, l);
        if (!seg_plan) throw std::logic_error("winning segment lost its plan");
        // A depot may win several adjacent cuts; they form one connected
        // segment of that depot, so fold them together.
        if (!segments.empty() && segments.back().depot_index == winner[l]) {
            auto& joined = segments.back();
            joined.a = z;
            joined.drones += seg_plan->drones;
            joined.tours.insert(joined.tours.begin(), seg_plan->pieces.begin(),
                                seg_plan->pieces.end());
        } else {
            segments.push_back({winner[l], z, l, seg_plan->drones, seg_plan->pieces});
        }
        l = z;
    }
    std::reverse(segments.begin(), segments.end());

    auto sol = assemble_solution(Algorithm::A1, best[length], std::move(segments));
    sol.n_star = sol.drones_used;
    return sol;
}

}  // namespace

SolveResult solve_a1(const Instance& inst, std::span<const DepotChains> tables,
                     SolveStats* stats) {
    const LazyAggregate lazy(tables);
    return run_a1(
        inst, lazy,
        [&](int depot, int a, int b) { return segment_plan(tables[depot - 1], a, b); }, stats);
}

SolveResult solve_a1_over(const Instance& inst, const AggregateTable& table, SolveStats* stats) {
    return run_a1(
        inst, table,
        [&](int depot, int a, int b) {
            return segment_plan_fresh(inst.depots[depot - 1], inst.budget, inst.barrier_length,
                                      inst.chain_cap(), a, b);
        },
        stats);
}

SolveResult solve_a2(const Instance& inst, std::span<const DepotChains> tables, int cap,
                     SolveStats* stats) {
    const int length = inst.barrier_length;
    const int m = int(inst.depots.size());
    if (cap < 0) throw std::invalid_argument("solve_a2: negative drone cap");

    const auto plane_at = [&](int l, int n) { return std::size_t(l) * (cap + 1) + n; };
    const std::size_t plane_size = std::size_t(length + 1) * (cap + 1);
    // prev holds layer i-1; cur is rewritten cell by cell within layer i.
    std::vector<double> prev(plane_size, kNan);
    std::vector<double> cur(plane_size, kNan);
    // Rightmost cut per (depot, boundary, budget); -1 hands over to the
    // previous depot. A depot may take several consecutive cuts: its chain
    // tables cannot always see that a segment splits cheaper at an interior
    // integer point, but the recursion can.
    std::vector<int> cuts(std::size_t(m) * plane_size, -1);
    long long queries = 0;

    // Virtual layer 0: nothing may extend left of depot 1.
    for (int n = 0; n <= cap; ++n) prev[plane_at(0, n)] = 0.0;

    struct RowEntry {
        double cost;
        int drones;
    };
    std::vector<std::optional<RowEntry>> row(length + 1);

    for (int i = 1; i <= m; ++i) {
        const auto& chains = tables[i - 1];
        int* depot_cuts = cuts.data() + std::size_t(i - 1) * plane_size;
        for (int l = 0; l <= length; ++l) {
            for (int z = 0; z < l; ++z) {
                row[z].reset();
                const auto k = min_drones(chains, z, l);
                if (!k) continue;
                const auto cost = segment_cost(chains, z, l);
                ++queries;
                if (cost) row[z] = RowEntry{*cost, *k};
            }
            for (int n = 0; n <= cap; ++n) {
                // depot i may stop here and leave [0, l] to depots 1..i-1
                double best = prev[plane_at(l, n)];
                int best_cut = -1;
                for (int z = 0; z < l; ++z) {
                    if (!row[z] || row[z]->drones > n) continue;
                    const double carried = cur[plane_at(z, n - row[z]->drones)];
                    if (!finite(carried)) continue;
                    const double cand = row[z]->cost + carried;
                    if (!finite(best) || cand < best - kLengthTol) {
                        best = cand;
                        best_cut = z;
                    }
                }
                cur[plane_at(l, n)] = best;
                depot_cuts[plane_at(l, n)] = best_cut;
            }
        }
        std::swap(prev, cur);
    }

    if (stats) stats->table_queries = queries;
    if (!finite(prev[plane_at(length, cap)]))
        return Infeasible{std::nullopt, std::nullopt,
                          "drone cap admits no cover on the integer grid"};

    std::vector<SegmentAssignment> segments(m);
    int l = length;
    int n = cap;
    for (int i = m; i >= 1; --i) {
        const int* depot_cuts = cuts.data() + std::size_t(i - 1) * plane_size;
        const int right = l;
        std::vector<TourPiece> tours;
        int drones = 0;
        while (true) {
            const int z = depot_cuts[plane_at(l, n)];
            if (z < 0) break;  // this depot takes nothing further left
            const auto seg_plan = segment_plan(tables[i - 1], z, l);
            if (!seg_plan) throw std::logic_error("backward pass lost a segment plan");
            tours.insert(tours.begin(), seg_plan->pieces.begin(), seg_plan->pieces.end());
            drones += seg_plan->drones;
            n -= seg_plan->drones;
            l = z;
        }
        segments[i - 1] = {i, l, right, drones, std::move(tours)};
    }
    if (l != 0) throw std::logic_error("backward pass did not return to the barrier start");

    return assemble_solution(Algorithm::A2, prev[plane_at(length, cap)], std::move(segments));
}

SolveResult solve(const Instance& inst) {
    const auto report = feasibility_check(inst);
    if (!report.coverable)
        return Infeasible{report.gap, std::nullopt, "reach spans leave part of the barrier bare"};
    if (inst.max_drones && report.n_min && *report.n_min > *inst.max_drones)
        return Infeasible{std::nullopt, report.n_min, "drone cap below the minimum cover size"};

    const auto tables = build_tables(inst);
    auto first = solve_a1(inst, tables);
    if (auto* infeasible = std::get_if<Infeasible>(&first)) {
        infeasible->n_min = report.n_min;
        return first;
    }
    auto& a1 = std::get<Solution>(first);
    a1.n_min = report.n_min;
    if (!inst.max_drones || a1.drones_used <= *inst.max_drones) return first;

    auto second = solve_a2(inst, tables, *inst.max_drones);
    if (auto* infeasible = std::get_if<Infeasible>(&second)) {
        infeasible->n_min = report.n_min;
        return second;
    }
    auto& a2 = std::get<Solution>(second);
    a2.n_min = report.n_min;
    a2.n_star = a1.drones_used;
    return second;
}

std::vector<TourPiece> extract_tours(const DepotChains& chains, int a, int b) {
    const auto plan = segment_plan(chains, a, b);
    if (!plan) throw std::invalid_argument("extract_tours: segment is not coverable");
    return plan->pieces;
}

}  // namespace brs
