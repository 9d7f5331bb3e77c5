#include "lipreg/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lipreg {

DataSet::DataSet(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.empty())
        throw std::invalid_argument("DataSet: at least one sample required");
    if (xs_.size() != ys_.size())
        throw std::invalid_argument("DataSet: xs and ys must have equal length");
    for (std::size_t m = 0; m < xs_.size(); ++m) {
        if (!std::isfinite(xs_[m]) || !std::isfinite(ys_[m]))
            throw std::invalid_argument("DataSet: samples must be finite");
        if (m > 0 && !(xs_[m - 1] < xs_[m]))
            throw std::invalid_argument("DataSet: abscissas must be strictly increasing");
    }
}

std::vector<double> chord_slopes(const DataSet& data) {
    std::vector<double> s;
    if (data.size() < 2) return s;
    s.reserve(data.size() - 1);
    for (std::size_t m = 0; m + 1 < data.size(); ++m)
        s.push_back((data.y(m + 1) - data.y(m)) / (data.x(m + 1) - data.x(m)));
    return s;
}

} // namespace lipreg
