#include "brs/validate.hpp"

#include <cmath>

#include "brs/strings.hpp"

namespace brs {

std::vector<std::string> validate_solution(const Instance& inst, const Solution& sol,
                                           std::optional<int> drone_cap) {
    std::vector<std::string> issues;
    const auto flag = [&](std::string msg) { issues.push_back(std::move(msg)); };

    if (sol.segments.empty()) {
        flag("solution has no segments");
        return issues;
    }

    // Segments must tile [0, L] left to right.
    if (sol.segments.front().a != 0) flag("first segment does not start at 0");
    if (sol.segments.back().b != inst.barrier_length)
        flag("last segment does not end at the barrier end");
    for (std::size_t i = 0; i < sol.segments.size(); ++i) {
        const auto& seg = sol.segments[i];
        if (seg.a > seg.b) flag(strprintf("segment %zu is reversed", i));
        if (i > 0 && sol.segments[i - 1].b != seg.a)
            flag(strprintf("segments %zu and %zu do not abut", i - 1, i));
        if (seg.depot_index < 1 || seg.depot_index > int(inst.depots.size()))
            flag(strprintf("segment %zu names depot %d which does not exist", i,
                           seg.depot_index));
    }

    // Order preservation: depots of non-empty segments strictly increase.
    int last_depot = 0;
    for (const auto& seg : sol.segments) {
        if (seg.b == seg.a) continue;
        if (seg.depot_index <= last_depot)
            flag(strprintf("depot %d breaks the left-to-right depot order", seg.depot_index));
        last_depot = seg.depot_index;
    }

    double tour_sum = 0.0;
    int drones = 0;
    for (std::size_t i = 0; i < sol.segments.size(); ++i) {
        const auto& seg = sol.segments[i];
        if (int(seg.tours.size()) != seg.drones)
            flag(strprintf("segment %zu drone count disagrees with its tours", i));
        drones += int(seg.tours.size());
        if (seg.tours.empty()) {
            if (seg.b != seg.a) flag(strprintf("segment %zu is non-empty but has no tours", i));
            continue;
        }
        if (seg.depot_index < 1 || seg.depot_index > int(inst.depots.size())) continue;
        const Depot& depot = inst.depots[seg.depot_index - 1];
        double at = seg.a;
        for (std::size_t t = 0; t < seg.tours.size(); ++t) {
            const auto& piece = seg.tours[t];
            if (std::abs(piece.start - at) > 1e-6)
                flag(strprintf("segment %zu tour %zu leaves a hole at %.9f", i, t, at));
            const double actual = tour_length(depot, {piece.start, piece.end});
            if (std::abs(actual - piece.length) > 1e-6)
                flag(strprintf("segment %zu tour %zu misstates its length", i, t));
            if (actual > inst.budget + kLengthTol)
                flag(strprintf("segment %zu tour %zu exceeds the budget: %.9f", i, t, actual));
            tour_sum += piece.length;
            at = piece.end;
        }
        if (std::abs(at - seg.b) > 1e-6)
            flag(strprintf("segment %zu tours stop short of %d", i, seg.b));
    }

    if (drones != sol.drones_used)
        flag(strprintf("drones_used = %d but tours count %d", sol.drones_used, drones));
    if (drone_cap && drones > *drone_cap)
        flag(strprintf("%d drones exceed the cap of %d", drones, *drone_cap));
    if (std::abs(tour_sum - sol.objective) > 1e-6)
        flag(strprintf("objective %.9f differs from tour total %.9f", sol.objective, tour_sum));
    return issues;
}

}  // namespace brs
