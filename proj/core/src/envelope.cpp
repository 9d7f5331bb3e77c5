#include "lipreg/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipreg {

double lmin(const InterpolationInstance& inst) {
    if (inst.size() < 2) return 0.0;
    double best = 0.0;
    for (std::size_t m = 0; m + 1 < inst.size(); ++m) {
        const double s = (inst.y(m + 1) - inst.y(m)) / (inst.x(m + 1) - inst.x(m));
        best = std::max(best, std::abs(s));
    }
    return best;
}

double tvmin(const InterpolationInstance& inst) {
    if (inst.size() < 3) return 0.0;
    double sum = 0.0;
    for (std::size_t m = 1; m + 1 < inst.size(); ++m) {
        const double left = (inst.y(m) - inst.y(m - 1)) / (inst.x(m) - inst.x(m - 1));
        const double right = (inst.y(m) - inst.y(m + 1)) / (inst.x(m) - inst.x(m + 1));
        sum += std::abs(left - right);
    }
    return sum;
}

EnvelopeBand envelope_band(const InterpolationInstance& inst, double x) {
    if (inst.size() < 2)
        throw std::invalid_argument("envelope_band: at least two samples required");
    if (!std::isfinite(x)) throw std::invalid_argument("envelope_band: non-finite abscissa");
    const double lip = lmin(inst);
    const std::size_t m = inst.size();

    EnvelopeBand band{x, 0.0, 0.0};
    if (x <= inst.x(0)) {
        const double r = lip * (inst.x(0) - x);
        band.lo = inst.y(0) - r;
        band.hi = inst.y(0) + r;
        return band;
    }
    if (x >= inst.x(m - 1)) {
        const double r = lip * (x - inst.x(m - 1));
        band.lo = inst.y(m - 1) - r;
        band.hi = inst.y(m - 1) + r;
        return band;
    }
    const auto it = std::upper_bound(inst.xs().begin(), inst.xs().end(), x);
    const std::size_t right = static_cast<std::size_t>(it - inst.xs().begin());
    const std::size_t left = right - 1;
    const double dl = x - inst.x(left);
    const double dr = inst.x(right) - x;
    band.lo = std::max(inst.y(left) - lip * dl, inst.y(right) - lip * dr);
    band.hi = std::min(inst.y(left) + lip * dl, inst.y(right) + lip * dr);
    if (band.lo > band.hi) {  // cones pinch; rounding can cross them slightly
        const double mid = 0.5 * (band.lo + band.hi);
        band.lo = band.hi = mid;
    }
    return band;
}

} // namespace lipreg
