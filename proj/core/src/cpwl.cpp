#include "lipreg/cpwl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace lipreg {

namespace {

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string("CpwlFunction: non-finite ") + what);
}

} // namespace

CpwlFunction::CpwlFunction(double c0, double c1) : c0_(c0), c1_(c1) {
    check_finite(c0, "c0");
    check_finite(c1, "c1");
}

CpwlFunction::CpwlFunction(double c0, double c1, std::vector<double> knots,
                           std::vector<double> coeffs)
    : c0_(c0), c1_(c1) {
    check_finite(c0, "c0");
    check_finite(c1, "c1");
    if (knots.size() != coeffs.size())
        throw std::invalid_argument("CpwlFunction: knots and coeffs must have equal length");
    for (std::size_t k = 0; k < knots.size(); ++k) {
        check_finite(knots[k], "knot");
        check_finite(coeffs[k], "coefficient");
    }

    std::vector<std::size_t> order(knots.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return knots[a] < knots[b]; });

    knots_.reserve(knots.size());
    coeffs_.reserve(coeffs.size());
    for (std::size_t idx : order) {
        if (!knots_.empty() && knots[idx] - knots_.back() <= kKnotMergeTol) {
            coeffs_.back() += coeffs[idx];
            if (std::abs(coeffs_.back()) <= kCoeffDropTol) {
                knots_.pop_back();
                coeffs_.pop_back();
            }
        } else if (std::abs(coeffs[idx]) > kCoeffDropTol) {
            knots_.push_back(knots[idx]);
            coeffs_.push_back(coeffs[idx]);
        }
    }
}

std::vector<double> CpwlFunction::region_slopes() const {
    std::vector<double> slopes;
    slopes.reserve(coeffs_.size() + 1);
    double s = c1_;
    slopes.push_back(s);
    for (double a : coeffs_) {
        s += a;
        slopes.push_back(s);
    }
    return slopes;
}

double CpwlFunction::operator()(double x) const {
    if (!std::isfinite(x)) throw std::invalid_argument("CpwlFunction: non-finite evaluation point");
    double value = c0_ + c1_ * x;
    for (std::size_t k = 0; k < knots_.size() && knots_[k] < x; ++k)
        value += coeffs_[k] * (x - knots_[k]);
    return value;
}

double lipschitz_constant(const CpwlFunction& f) {
    double lip = 0.0;
    for (double s : f.region_slopes()) lip = std::max(lip, std::abs(s));
    return lip;
}

double min_slope(const CpwlFunction& f) {
    const std::vector<double> slopes = f.region_slopes();
    const bool all_pos = std::all_of(slopes.begin(), slopes.end(), [](double s) { return s > 0.0; });
    const bool all_neg = std::all_of(slopes.begin(), slopes.end(), [](double s) { return s < 0.0; });
    if (!all_pos && !all_neg) return 0.0;
    double m = std::abs(slopes.front());
    for (double s : slopes) m = std::min(m, std::abs(s));
    return m;
}

double tv2(const CpwlFunction& f) {
    double sum = 0.0;
    for (double a : f.coeffs()) sum += std::abs(a);
    return sum;
}

LipTvBound check_lip_tv_bound(const CpwlFunction& f) {
    LipTvBound out;
    out.lipschitz = lipschitz_constant(f);
    out.min_slope = min_slope(f);
    out.tv2 = tv2(f);
    out.slack = out.tv2 + out.min_slope - out.lipschitz;
    return out;
}

CpwlFunction canonical_interpolant(const DataSet& data) {
    if (data.size() < 2)
        throw std::invalid_argument("canonical_interpolant: at least two samples required");
    const std::vector<double> s = chord_slopes(data);
    const double c1 = s.front();
    const double c0 = data.y(0) - c1 * data.x(0);
    std::vector<double> knots;
    std::vector<double> coeffs;
    knots.reserve(s.size() - 1);
    coeffs.reserve(s.size() - 1);
    for (std::size_t m = 1; m < s.size(); ++m) {
        knots.push_back(data.x(m));
        coeffs.push_back(s[m] - s[m - 1]);
    }
    return CpwlFunction(c0, c1, std::move(knots), std::move(coeffs));
}

} // namespace lipreg
