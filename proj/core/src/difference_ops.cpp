#include "lipreg/difference_ops.hpp"

#include <stdexcept>

namespace lipreg {

std::vector<double> DifferenceOperator::apply(std::span<const double> z) const {
    if (z.size() != cols_) throw std::invalid_argument("DifferenceOperator: apply size mismatch");
    std::vector<double> out(rows(), 0.0);
    for (std::size_t r = 0; r < rows(); ++r) {
        double acc = 0.0;
        for (std::size_t k = 0; k < width_; ++k) acc += values_[r][k] * z[r + k];
        out[r] = acc;
    }
    return out;
}

std::vector<double> DifferenceOperator::apply_transpose(std::span<const double> u) const {
    if (u.size() != rows())
        throw std::invalid_argument("DifferenceOperator: transpose size mismatch");
    std::vector<double> out(cols_, 0.0);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k = 0; k < width_; ++k) out[r + k] += values_[r][k] * u[r];
    return out;
}

void DifferenceOperator::add_scaled_gram(double rho, SymmetricBandMatrix& gram) const {
    if (gram.size() != cols_) throw std::invalid_argument("DifferenceOperator: gram size mismatch");
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k = 0; k < width_; ++k)
            for (std::size_t l = k; l < width_; ++l)
                gram.add(r + k, r + l, rho * values_[r][k] * values_[r][l]);
}

DifferenceOperator DifferenceOperator::slope_operator(std::span<const double> xs) {
    const std::size_t m = xs.size();
    if (m < 2) throw std::invalid_argument("slope_operator: need at least two abscissas");
    DifferenceOperator op(m, 2);
    op.values_.resize(m - 1);
    for (std::size_t r = 0; r + 1 < m; ++r) {
        const double v = 1.0 / (xs[r + 1] - xs[r]);
        op.values_[r] = {-v, v, 0.0};
    }
    return op;
}

DifferenceOperator DifferenceOperator::slope_difference_operator(std::span<const double> xs) {
    const std::size_t m = xs.size();
    if (m < 3) throw std::invalid_argument("slope_difference_operator: need at least three abscissas");
    DifferenceOperator op(m, 3);
    op.values_.resize(m - 2);
    for (std::size_t r = 0; r + 2 < m; ++r) {
        const double va = 1.0 / (xs[r + 1] - xs[r]);
        const double vb = 1.0 / (xs[r + 2] - xs[r + 1]);
        op.values_[r] = {-va, va + vb, -vb};
    }
    return op;
}

} // namespace lipreg
