#include "brs/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <variant>

namespace brs {

namespace {

// Library distributions differ across standard libraries; draw uniforms by
// hand so a seed means the same instance everywhere.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

bool every_depot_useful(const Instance& inst) {
    for (const auto& depot : inst.depots)
        if (!reach_span(depot, inst.budget, inst.barrier_length)) return false;
    return true;
}

bool grid_solvable(const Instance& inst) {
    const auto report = feasibility_check(inst);
    if (!report.coverable) return false;
    if (inst.max_drones && report.n_min && *report.n_min > *inst.max_drones) return false;
    const auto tables = build_tables(inst);
    const auto first = solve_a1(inst, tables);
    if (!std::holds_alternative<Solution>(first)) return false;
    if (inst.max_drones) {
        const auto capped = solve_a2(inst, tables, *inst.max_drones);
        if (!std::holds_alternative<Solution>(capped)) return false;
    }
    return true;
}

}  // namespace

Instance generate_instance(std::uint64_t seed, const GeneratorConfig& config) {
    if (config.barrier_length < 2 || config.depots < 1)
        throw std::invalid_argument("generate_instance: degenerate configuration");

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const double length = config.barrier_length;

    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
        Instance inst;
        inst.barrier_length = config.barrier_length;
        inst.max_drones = config.max_drones;

        // Spread abscissas with a minimum gap, heights within the band.
        std::vector<double> xs;
        bool distinct = true;
        for (int i = 0; i < config.depots && distinct; ++i) {
            const double lo = length * (0.04 + 0.92 * i / config.depots);
            const double hi = length * (0.04 + 0.92 * (i + 1) / config.depots);
            xs.push_back(uniform(rng, lo, hi));
            if (i > 0 && xs[i] - xs[i - 1] < 0.05) distinct = false;
        }
        if (!distinct) continue;

        const double max_alt = std::max(config.min_altitude + 0.1,
                                        config.max_altitude_frac * length);
        for (int i = 0; i < config.depots; ++i) {
            inst.depots.push_back({i + 1, xs[i], uniform(rng, config.min_altitude, max_alt)});
            inst.input_order.push_back(i);
        }

        // Coverage floor: both barrier ends and every midpoint between
        // adjacent depots must fit a unit tour from the nearest depot.
        double floor_q = 2.0 * inst.depots.front().y + 1.0;
        floor_q = std::max(floor_q, 2.0 * barrier_distance(inst.depots.front(), 0.0) + 1.0);
        floor_q = std::max(floor_q, 2.0 * barrier_distance(inst.depots.back(), length) + 1.0);
        for (std::size_t i = 1; i < inst.depots.size(); ++i) {
            const double mid = 0.5 * (inst.depots[i - 1].x + inst.depots[i].x);
            const double nearest = std::min(barrier_distance(inst.depots[i - 1], mid),
                                            barrier_distance(inst.depots[i], mid));
            floor_q = std::max(floor_q, 2.0 * nearest + 1.0);
        }

        // Tour spans aim at roughly one depot's share of the barrier.
        double tallest = 0.0;
        for (const auto& depot : inst.depots) tallest = std::max(tallest, depot.y);
        const double span_term =
            (2.0 * tallest + 2.0 * length / config.depots) * uniform(rng, 0.8, 1.0);
        double budget = std::max(floor_q * uniform(rng, 1.05, 1.2), span_term) + 0.237;
        for (int boost = 0; boost < 10; ++boost) {
            inst.budget = budget;
            if (config.max_drones) {
                const auto report = feasibility_check(inst);
                if (report.coverable && report.n_min &&
                    *report.n_min > std::max(1, *config.max_drones - 1)) {
                    budget *= 1.25;
                    continue;
                }
            }
            if (every_depot_useful(inst) && grid_solvable(inst)) return inst;
            budget *= 1.25;
        }
    }
    throw std::runtime_error("generate_instance: no solvable instance after bounded retries");
}

}  // namespace brs
