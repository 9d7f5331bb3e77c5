#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lipreg/banded.hpp"

namespace lipreg {

/// Banded difference operator with at most three nonzeros per row, each row
/// starting at column == row index. Rows are built from the inverse sample
/// gaps v_m = 1/(x_m - x_{m-1}).
class DifferenceOperator {
public:
    std::size_t rows() const noexcept { return values_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t row_width() const noexcept { return width_; }

    /// Nonzero values of row r, at columns r, r+1, ..., r+row_width()-1.
    std::span<const double> row(std::size_t r) const {
        return {values_[r].data(), width_};
    }

    std::vector<double> apply(std::span<const double> z) const;
    std::vector<double> apply_transpose(std::span<const double> u) const;
    /// Accumulates rho * L^T L into the banded Gram matrix.
    void add_scaled_gram(double rho, SymmetricBandMatrix& gram) const;

    /// Chord-slope operator, shape (M-1) x M: row m maps z to
    /// (z_{m+1} - z_m) / (x_{m+1} - x_m). Its sup-norm is the optimal
    /// Lipschitz constant of any interpolant of (x, z).
    static DifferenceOperator slope_operator(std::span<const double> xs);

    /// Slope-change operator, shape (M-2) x M: row m maps z to s_m - s_{m+1},
    /// the negated second divided difference. The l1 norm of the image is the
    /// second-order total variation of the canonical interpolant of (x, z).
    static DifferenceOperator slope_difference_operator(std::span<const double> xs);

private:
    DifferenceOperator(std::size_t cols, std::size_t width) : cols_(cols), width_(width) {}

    std::size_t cols_ = 0;
    std::size_t width_ = 0;
    std::vector<std::array<double, 3>> values_;
};

} // namespace lipreg
