#pragma once

#include <cmath>

#include "brs/solver.hpp"

namespace brs::testing {

// Three depots over a length-156 barrier, outer pair symmetric, middle one
// high enough that its full budget covers exactly [68, 88]:
// dist((78, 10*sqrt(35)), (68,0)) = sqrt(100 + 3500) = 60, so 60+20+60 = 140.
inline Instance three_depot_instance(std::optional<int> max_drones = 3) {
    Instance inst;
    inst.barrier_length = 156;
    inst.budget = 140.0;
    inst.max_drones = max_drones;
    inst.depots = {{1, 18.0, 10.0}, {2, 78.0, 10.0 * std::sqrt(35.0)}, {3, 138.0, 10.0}};
    inst.input_order = {0, 1, 2};
    return inst;
}

// Same geometry shrunk by 1/12 so the exhaustive reference can afford it.
inline Instance scaled_three_depot_instance() {
    Instance inst;
    inst.barrier_length = 13;
    inst.budget = 140.0 / 12.0;
    inst.depots = {{1, 18.0 / 12.0, 10.0 / 12.0},
                   {2, 78.0 / 12.0, 10.0 * std::sqrt(35.0) / 12.0},
                   {3, 138.0 / 12.0, 10.0 / 12.0}};
    inst.input_order = {0, 1, 2};
    return inst;
}

inline Instance single_origin_instance(int barrier_length = 4, double budget = 10.0) {
    Instance inst;
    inst.barrier_length = barrier_length;
    inst.budget = budget;
    inst.depots = {{1, 0.0, 0.0}};
    inst.input_order = {0};
    return inst;
}

// Mirror the whole configuration across the barrier midpoint.
inline Instance mirrored(const Instance& inst) {
    Instance out = inst;
    out.depots.clear();
    for (auto it = inst.depots.rbegin(); it != inst.depots.rend(); ++it)
        out.depots.push_back({int(out.depots.size()) + 1,
                              double(inst.barrier_length) - it->x, it->y});
    return out;
}

// Expected first-depot split cost for [0, 78]: one tour to the perpendicular
// foot plus one onward, evaluated straight from the triangle edges.
inline double split_cost_at_foot() {
    return std::sqrt(424.0) + 20.0 + std::sqrt(3700.0) + 78.0;
}

}  // namespace brs::testing
