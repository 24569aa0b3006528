#pragma once

#include <string>

#include "brs/solver.hpp"

namespace brs {

// Static trajectory figure: the barrier as the horizontal axis, depots as
// labelled points, each drone tour as a triangle, covered spans color-coded
// by depot. Output bytes are a pure function of the inputs.
// Throws std::invalid_argument when the solution does not fit the instance.
std::string render_solution_svg(const Instance& inst, const Solution& sol);

}  // namespace brs
