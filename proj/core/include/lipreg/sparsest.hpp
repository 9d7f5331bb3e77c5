#pragma once

#include "lipreg/cpwl.hpp"
#include "lipreg/dataset.hpp"

namespace lipreg {

/// Relative threshold below which a slope change between consecutive chords
/// is treated as collinear when sparsifying; solver output carries
/// residual-level noise that must not create spurious regions.
inline constexpr double kCollinearTol = 1e-10;

/// CPWL interpolant of the instance with the minimum possible number of
/// knots. Divide and conquer on the canonical interpolant's slope-change
/// signs: collinear triples split the problem, sign changes freeze the
/// connecting chord on both sides, and each maximal convex/concave run is
/// interpolated by lines through consecutive point pairs, which meet
/// strictly between the paired abscissas. The result attains the optimal
/// Lipschitz constant lmin and the optimal second-order total variation
/// tvmin. Minimal interpolants are generally not unique; this returns one
/// deterministic representative. Requires M >= 2.
CpwlFunction sparsest_interpolant(const InterpolationInstance& inst);

/// Verification oracle: smallest k such that a CPWL function with k knots
/// passes within a small tolerance of every point. Enumerates assignments of
/// the points to k+1 consecutive nonempty groups and decides each candidate
/// by linear feasibility over the line parameters (knot-ordering sign
/// patterns enumerated). Exponential; guarded to M <= 8.
int brute_force_min_knots(const InterpolationInstance& inst, int max_knots);

} // namespace lipreg
