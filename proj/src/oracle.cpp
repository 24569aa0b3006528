#include "brs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace brs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dist(const Depot& depot, double u) { return barrier_distance(depot, u); }

// Exhaustive split-point search for one depot covering [a, b] with k tours.
struct SegmentSearch {
    const Depot& depot;
    double budget;
    double b;
    int k;
    const std::vector<double>& cand;
    double best = kInf;

    void run(int placed, int idx_min, double prev, double acc) {
        // Remaining tours descend at prev, ascend at b and traverse the rest.
        const double bound = acc + (b - prev) + dist(depot, prev) + dist(depot, b);
        if (bound >= best) return;
        if (placed == k - 1) {
            const double t = tour_length(depot, {prev, b});
            if (t <= budget + kLengthTol && acc + t < best) best = acc + t;
            return;
        }
        for (int i = idx_min; i < int(cand.size()); ++i) {
            const double u = cand[i];
            if (u < prev - 1e-12) continue;
            const double t = tour_length(depot, {prev, u});
            if (t > budget + kLengthTol) break;  // tours only grow farther right
            run(placed + 1, i, u, acc + t);
        }
    }
};

struct PartOption {
    int drones;
    double cost;
};

// Partition enumeration with cost-bound pruning; no value reuse across
// boundaries beyond the per-part cost cache.
struct ExhaustiveSearch {
    const Instance& inst;
    double step;
    int length;
    std::vector<std::vector<std::optional<std::vector<PartOption>>>> part_cache;

    double best = kInf;
    struct Part {
        int z;
        int depot;
        int drones;
        double cost;
    };
    std::vector<Part> trail;
    std::vector<Part> best_trail;
    long long nodes = 0;

    ExhaustiveSearch(const Instance& inst_, double step_)
        : inst(inst_), step(step_), length(inst_.barrier_length),
          part_cache(inst_.depots.size()) {
        for (auto& per_depot : part_cache)
            per_depot.resize(std::size_t(length + 1) * std::size_t(length + 1));
    }

    const std::vector<PartOption>& options(int depot_idx, int z, int l) {
        auto& slot = part_cache[depot_idx][std::size_t(z) * (length + 1) + l];
        if (slot) return *slot;
        std::vector<PartOption> opts;
        const Depot& depot = inst.depots[depot_idx];
        const auto k_min =
            oracle_min_drones(depot, inst.budget, length, z, l, length);
        if (k_min) {
            const double base = (l - z) + dist(depot, z) + dist(depot, l);
            const double d_min = dist(depot, std::clamp(depot.x, double(z), double(l)));
            double cheapest = kInf;
            for (int k = *k_min; k <= length; ++k) {
                if (base + 2.0 * (k - 1) * d_min >= cheapest - 1e-12) break;
                const auto g = oracle_segment_cost(depot, inst.budget, z, l, k, step);
                if (g && *g < cheapest - 1e-12) {
                    opts.push_back({k, *g});
                    cheapest = *g;
                } else if (k > *k_min + 8) {
                    break;
                }
            }
        }
        slot = std::move(opts);
        return *slot;
    }

    void run(int l, int drones_left, double acc) {
        ++nodes;
        if (l == 0) {
            if (acc < best) {
                best = acc;
                best_trail = trail;
            }
            return;
        }
        if (acc + l >= best) return;  // covering a unit costs at least its length
        for (int z = 0; z < l; ++z) {
            for (int d = 0; d < int(inst.depots.size()); ++d) {
                for (const auto& opt : options(d, z, l)) {
                    if (opt.drones > drones_left) continue;
                    if (acc + opt.cost + z >= best) continue;
                    trail.push_back({z, d + 1, opt.drones, opt.cost});
                    run(z, drones_left - opt.drones, acc + opt.cost);
                    trail.pop_back();
                }
            }
        }
    }
};

}  // namespace

std::optional<double> oracle_max_reach(const Depot& depot, double start, double budget) {
    if (2.0 * dist(depot, start) > budget + kLengthTol) return std::nullopt;
    double lo = start;
    double hi = start + budget + 1.0;
    while (hi - lo > 1e-12 * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (tour_length(depot, {start, mid}) <= budget + kLengthTol)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::optional<int> oracle_min_drones(const Depot& depot, double budget, double barrier_length,
                                     int a, int b, int cap) {
    if (a == b) return 0;
    double at = a;
    int used = 0;
    while (used < cap) {
        const auto raw = oracle_max_reach(depot, at, budget);
        if (!raw) return std::nullopt;
        const double reach = std::min(*raw, barrier_length);
        const bool at_end = reach >= barrier_length - kLengthTol;
        if (reach - at < 1.0 - kLengthTol && !at_end) return std::nullopt;
        ++used;
        if (reach >= double(b) - kLengthTol) return used;
        if (at_end) return std::nullopt;
        at = reach;
    }
    return std::nullopt;
}

std::optional<double> oracle_segment_cost(const Depot& depot, double budget, int a, int b, int k,
                                          double step) {
    if (a == b) return 0.0;
    if (k <= 0 || step <= 0.0) return std::nullopt;

    std::vector<double> cand;
    cand.push_back(a);
    cand.push_back(b);
    for (int i = 1;; ++i) {
        const double u = a + i * step;
        if (u >= b - 1e-12) break;
        cand.push_back(u);
    }
    // Budget-saturated split points, chained from both ends by bisection.
    double at = a;
    for (int i = 0; i + 1 < k; ++i) {
        const auto t = oracle_max_reach(depot, at, budget);
        if (!t || *t >= b - 1e-12 || *t - at < 1.0 - kLengthTol) break;
        cand.push_back(*t);
        at = *t;
    }
    const Depot mirrored{depot.index, -depot.x, depot.y};
    at = -double(b);
    for (int i = 0; i + 1 < k; ++i) {
        const auto t = oracle_max_reach(mirrored, at, budget);
        if (!t || -*t <= a + 1e-12 || *t - at < 1.0 - kLengthTol) break;
        cand.push_back(-*t);
        at = *t;
    }
    if (depot.x > a + 1e-12 && depot.x < b - 1e-12) cand.push_back(depot.x);

    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](double u, double v) { return std::abs(u - v) < 1e-12; }),
               cand.end());

    SegmentSearch search{depot, budget, double(b), k, cand};
    search.run(0, 0, a, 0.0);
    if (search.best == kInf) return std::nullopt;
    return search.best;
}

std::optional<OracleResult> oracle_optimum(const Instance& inst, std::optional<int> cap,
                                          double step) {
    if (inst.barrier_length > 24)
        throw std::invalid_argument("oracle_optimum: barrier too long for exhaustive search");
    if (inst.depots.empty()) return std::nullopt;

    ExhaustiveSearch search(inst, step);
    const int drone_budget = cap ? *cap : inst.barrier_length;
    search.run(inst.barrier_length, drone_budget, 0.0);
    if (search.best == kInf) return std::nullopt;

    OracleResult out;
    out.objective = search.best;
    out.states_visited = search.nodes;
    // Trail entries carry the left boundary of each part, rightmost first.
    out.partition.push_back(0);
    for (auto it = search.best_trail.rbegin(); it != search.best_trail.rend(); ++it) {
        out.part_depots.push_back(it->depot);
        out.part_drones.push_back(it->drones);
        if (it->z != 0) out.partition.push_back(it->z);
    }
    out.partition.push_back(inst.barrier_length);
    return out;
}

}  // namespace brs
