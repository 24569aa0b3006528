#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brs/solver.hpp"

namespace brs {

// Independent solution checks: segments tile [0, L] in depot order, every
// tour respects the budget, tours tile their segment, counts and the
// objective add up. Returns human-readable findings; empty means valid.
// Only tour_length is shared with the solver.
std::vector<std::string> validate_solution(const Instance& inst, const Solution& sol,
                                           std::optional<int> drone_cap = std::nullopt);

}  // namespace brs
