#pragma once

#include <map>
#include <string>

#include "seatcfn/cfn.hpp"
#include "seatcfn/compiler.hpp"
#include "seatcfn/seating_problem.hpp"

namespace seatcfn {

// Full guest -> global seat mapping for a compiled assignment, fixed guests
// included.
std::map<int, int> resolve_seating(const SeatingProblem& problem, const NodeChoiceMap& map,
                                   const Assignment& a);

// SVG 1.1 floor plan: tables as circles or lines, seats as labeled dots.
// Seats holding more than one guest are flagged and their labels stacked.
// Pass nullptr to draw the empty room. Output is deterministic.
std::string render_chart(const SeatingProblem& problem,
                         const std::map<int, int>* seating = nullptr);

}  // namespace seatcfn
