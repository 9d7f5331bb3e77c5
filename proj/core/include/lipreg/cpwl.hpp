#pragma once

#include <cstddef>
#include <vector>

#include "lipreg/dataset.hpp"

namespace lipreg {

/// Knots closer than this (absolute) are treated as coincident and merged.
inline constexpr double kKnotMergeTol = 1e-12;
/// Slope changes with |a| below this are dropped, fusing collinear regions.
inline constexpr double kCoeffDropTol = 1e-12;

/// Continuous piecewise-linear function on the real line, stored in the
/// canonical form
///
///     f(x) = c0 + c1*x + sum_k a_k * max(0, x - tau_k),
///
/// with strictly increasing knots tau_1 < ... < tau_K and nonzero slope
/// changes a_k. The function has K+1 linear regions whose slopes are the
/// prefix sums c1, c1+a_1, ..., c1+sum(a_k).
///
/// Construction normalizes its input: knot/coefficient pairs are sorted,
/// knots within kKnotMergeTol are merged (coefficients summed), and
/// coefficients with |a| <= kCoeffDropTol are removed.
class CpwlFunction {
public:
    /// Affine function c0 + c1*x.
    CpwlFunction(double c0, double c1);
    CpwlFunction(double c0, double c1, std::vector<double> knots, std::vector<double> coeffs);

    double c0() const noexcept { return c0_; }
    double c1() const noexcept { return c1_; }
    const std::vector<double>& knots() const noexcept { return knots_; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    std::size_t num_knots() const noexcept { return knots_.size(); }
    std::size_t num_regions() const noexcept { return knots_.size() + 1; }

    /// Slopes of the K+1 linear regions, left to right.
    std::vector<double> region_slopes() const;

    /// Pointwise evaluation; throws std::invalid_argument for non-finite x.
    double operator()(double x) const;

private:
    double c0_;
    double c1_;
    std::vector<double> knots_;
    std::vector<double> coeffs_;
};

inline double evaluate(const CpwlFunction& f, double x) { return f(x); }

/// Largest absolute region slope; equals ess sup |f'| for a CPWL function.
double lipschitz_constant(const CpwlFunction& f);

/// Infimal absolute difference quotient. Zero unless every region slope has
/// the same strict sign, in which case it is the smallest absolute slope.
double min_slope(const CpwlFunction& f);

/// Second-order total variation: sum of absolute slope changes at the knots.
double tv2(const CpwlFunction& f);

struct LipTvBound {
    double lipschitz;
    double min_slope;
    double tv2;
    double slack;  ///< tv2 + min_slope - lipschitz, nonnegative up to rounding
};

/// Evaluates the bound L(f) <= TV2(f) + l(f). The slack vanishes exactly
/// when the region slopes form a monotone sequence of one sign.
LipTvBound check_lip_tv_bound(const CpwlFunction& f);

/// The unique CPWL interpolant that is affine on every [x_m, x_{m+1}] and
/// extends the boundary segments outside [x_1, x_M]. Knots appear only at
/// interior data abscissas with a nonzero slope change. Requires M >= 2.
CpwlFunction canonical_interpolant(const DataSet& data);

} // namespace lipreg
