#pragma once

#include <vector>

namespace lipreg::detail {

/// Feasibility of the inequality system { x in R^n : a_i . x <= b_i } via a
/// phase-1 simplex with Bland's rule. Free variables are split into positive
/// parts internally. Intended for the tiny systems of the knot-minimization
/// oracle; exact up to the pivot tolerance.
bool linear_system_feasible(const std::vector<std::vector<double>>& rows,
                            const std::vector<double>& rhs);

} // namespace lipreg::detail
