#pragma once

#include <cstddef>
#include <vector>

namespace lipreg {

/// Sorted sample pairs (x_m, y_m), m = 1..M with M >= 1.
/// Abscissas must be finite and strictly increasing; construction throws
/// std::invalid_argument otherwise.
class DataSet {
public:
    DataSet(std::vector<double> xs, std::vector<double> ys);

    std::size_t size() const noexcept { return xs_.size(); }
    const std::vector<double>& xs() const noexcept { return xs_; }
    const std::vector<double>& ys() const noexcept { return ys_; }
    double x(std::size_t m) const { return xs_[m]; }
    double y(std::size_t m) const { return ys_[m]; }

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

/// Interpolation problems reuse the same container; the ordinates are then
/// exact values z_m to be matched, not noisy samples.
using InterpolationInstance = DataSet;

/// Slopes of the chords connecting consecutive samples, length M-1.
std::vector<double> chord_slopes(const DataSet& data);

} // namespace lipreg
