#pragma once

#include "lipreg/dataset.hpp"

namespace lipreg {

/// Optimal Lipschitz constant over all interpolants of the instance:
/// the largest absolute chord slope. Returns 0 for a single point.
double lmin(const InterpolationInstance& inst);

/// Optimal second-order total variation over all interpolants: the sum of
/// absolute consecutive chord-slope changes. Zero for M <= 2.
double tvmin(const InterpolationInstance& inst);

/// Admissible ordinate interval of the solution-set envelope at one
/// abscissa. The envelope is the union of the graphs of all minimal-
/// Lipschitz interpolants: between neighboring samples it is the
/// intersection of the two slope-lmin cones anchored there; outside the
/// sample range a single cone binds. Bands pinch to a point at the samples
/// and wherever a chord attains lmin.
struct EnvelopeBand {
    double x;
    double lo;
    double hi;
};

/// Requires M >= 2.
EnvelopeBand envelope_band(const InterpolationInstance& inst, double x);

} // namespace lipreg
